// Command-line front end: identifiability checks, Hilbert and Kruskal
// diagnostics, instance generation and the cost benchmark.

#include "waring/bench.hpp"
#include "waring/error.hpp"
#include "waring/generators.hpp"
#include "waring/hilbert.hpp"
#include "waring/identify.hpp"
#include "waring/io.hpp"
#include "waring/kruskal.hpp"
#include "waring/terracini.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitRankDeficient = 3;

struct GlobalFlags {
  bool diagnostics = false;
  bool strict = false;
  bool quiet = false;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw waring::Error(waring::ErrorKind::InvalidRequest, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

waring::Instance load(const std::string& path, const GlobalFlags& flags) {
  return waring::parse_instance(read_input(path), {.strict = flags.strict});
}

void emit(const waring::Json& doc) { std::cout << doc.dump(2) << '\n'; }

int exit_code_for(waring::VerdictKind kind) {
  switch (kind) {
    case waring::VerdictKind::IdentifiableSmallRank:
    case waring::VerdictKind::IdentifiableTerracini: return kExitOk;
    case waring::VerdictKind::Inconclusive: return kExitInconclusive;
    case waring::VerdictKind::RankDeficient: return kExitRankDeficient;
  }
  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact identifiability certificates for Waring decompositions of ternary forms"};
  app.require_subcommand(1);
  GlobalFlags flags;
  app.add_flag("--diagnostics", flags.diagnostics, "Attach the position report and family obstruction");
  app.add_flag("--strict", flags.strict, "Reject zero coefficients while parsing");
  app.add_flag("--quiet", flags.quiet, "Suppress informational output on stderr");

  std::string file;
  auto* check = app.add_subcommand("check", "Run the identifiability pipeline and print the verdict");
  check->add_option("file", file, "Instance file ('-' for stdin)")->required();
  check->fallthrough();

  std::optional<unsigned> dmax;
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function, first difference and Cayley-Bacharach data");
  hilbert->add_option("file", file, "Instance file")->required();
  hilbert->add_option("--dmax", dmax, "Highest degree to compute");
  hilbert->fallthrough();

  std::optional<unsigned> kdeg;
  auto* kruskal = app.add_subcommand("kruskal", "Kruskal rank of a Veronese image, or the full baseline certificate");
  kruskal->add_option("file", file, "Instance file")->required();
  kruskal->add_option("--d", kdeg, "Veronese degree; omit for the k_2 / k_{n+3} certificate");
  kruskal->fallthrough();

  auto* terracini = app.add_subcommand("terracini", "Rank of the Terracini matrix");
  terracini->add_option("file", file, "Instance file")->required();
  terracini->fallthrough();

  unsigned gen_n = 0;
  std::size_t gen_r = 0;
  std::string gen_position = "general";
  std::uint64_t seed = 1;
  std::string out_path;
  bool allow_out_of_range = false;
  auto* gen = app.add_subcommand("gen", "Generate a seeded instance");
  gen->add_option("--n", gen_n, "Degree parameter, d = 8 + 2n")->required();
  gen->add_option("--r", gen_r, "Number of points")->required();
  gen->add_option("--position", gen_position, "general | collinear(s) | conic(s) | cubic");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("-o,--output", out_path, "Write to a file instead of stdout");
  gen->add_flag("--allow-out-of-range", allow_out_of_range, "Permit r > 11 + 3n");
  gen->fallthrough();

  std::vector<unsigned> n_list = {0};
  std::vector<std::size_t> r_list = {8, 9, 10, 11};
  unsigned trials = 5;
  std::string csv_path;
  auto* bench = app.add_subcommand("bench", "Compare Terracini and Kruskal costs on general instances");
  bench->add_option("--n-list", n_list, "Values of n")->delimiter(',');
  bench->add_option("--r-list", r_list, "Values of r")->delimiter(',');
  bench->add_option("--trials", trials, "Trials per (n, r)");
  bench->add_option("--seed", seed, "Random seed");
  bench->add_option("--csv", csv_path, "Write CSV to a file; the summary then goes to stdout");
  bench->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }

  try {
    if (*check) {
      const auto verdict = waring::identify(load(file, flags), {.diagnostics = flags.diagnostics});
      emit(waring::to_json(verdict));
      return exit_code_for(verdict.kind);
    }
    if (*hilbert) {
      const auto inst = load(file, flags);
      const waring::PointSet z(inst.points);
      const auto profile = waring::hilbert_profile(z, dmax);
      waring::Json doc{{"points", z.size()}, {"profile", waring::to_json(profile)}};
      if (!z.empty()) {
        doc["cayley_bacharach"] = {{"degree", inst.degree}, {"holds", waring::cayley_bacharach(z, inst.degree)}};
        doc["gkr_inequality"] = {{"degree", inst.degree}, {"holds", waring::gkr_inequality_holds(z, inst.degree)}};
      }
      emit(doc);
      return kExitOk;
    }
    if (*kruskal) {
      const auto inst = load(file, flags);
      if (kdeg) {
        emit(waring::to_json(waring::kruskal_rank_d(waring::PointSet(inst.points), *kdeg)));
      } else {
        const auto cert = waring::kruskal_certificate(inst);
        emit(waring::Json{{"n", cert.n},
                          {"r", cert.r},
                          {"k2", waring::to_json(cert.k2)},
                          {"k_high", waring::to_json(cert.k_high)},
                          {"k2_condition", cert.k2_condition},
                          {"high_condition", cert.high_condition},
                          {"reshaped_bound", cert.reshaped_bound},
                          {"identifiable", cert.identifiable},
                          {"ops", waring::to_json(cert.ops)}});
      }
      return kExitOk;
    }
    if (*terracini) {
      emit(waring::to_json(waring::terracini_dimension(load(file, flags))));
      return kExitOk;
    }
    if (*gen) {
      const auto inst = waring::gen_instance(gen_n, gen_r, waring::Position::parse(gen_position), seed,
                                             {.allow_out_of_range = allow_out_of_range});
      const std::string text = waring::serialize_instance(inst) + "\n";
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path);
        if (!out) throw waring::Error(waring::ErrorKind::InvalidRequest, "cannot write '" + out_path + "'");
        out << text;
        if (!flags.quiet) std::cerr << "wrote " << out_path << '\n';
      }
      return kExitOk;
    }
    if (*bench) {
      const auto result = waring::run_bench(n_list, r_list, trials, seed);
      if (csv_path.empty()) {
        waring::write_csv(std::cout, result.records);
        if (!flags.quiet) waring::write_summary(std::cerr, result);
      } else {
        std::ofstream out(csv_path);
        if (!out) throw waring::Error(waring::ErrorKind::InvalidRequest, "cannot write '" + csv_path + "'");
        waring::write_csv(out, result.records);
        waring::write_summary(std::cout, result);
      }
      return kExitOk;
    }
  } catch (const waring::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
