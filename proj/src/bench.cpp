#include "waring/bench.hpp"

#include "waring/error.hpp"
#include "waring/generators.hpp"
#include "waring/identify.hpp"
#include "waring/kruskal.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>

namespace waring {

namespace {

std::uint64_t trial_seed(std::uint64_t seed, unsigned n, std::size_t r, unsigned trial) {
  // splitmix64 over the trial coordinates
  std::uint64_t x = seed ^ (static_cast<std::uint64_t>(n) << 48) ^ (static_cast<std::uint64_t>(r) << 24) ^ trial;
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

template <typename F>
double time_ms(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

struct Job {
  unsigned n;
  std::size_t r;
  unsigned trial;
};

}  // namespace

double fit_loglog_slope(std::span<const double> xs, std::span<const double> ys) {
  const std::size_t count = std::min(xs.size(), ys.size());
  if (count < 2) return 0.0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const double lx = std::log(xs[i]);
    const double ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = count * sxx - sx * sx;
  if (denom == 0.0) return 0.0;
  return (count * sxy - sx * sy) / denom;
}

BenchResult run_bench(std::span<const unsigned> n_values, std::span<const std::size_t> r_values, unsigned trials,
                      std::uint64_t seed) {
  BenchResult result;
  std::vector<Job> jobs;
  for (unsigned n : n_values) {
    for (std::size_t r : r_values) {
      if (r == 0 || r > 11 + 3 * static_cast<std::size_t>(n)) {
        result.skipped.emplace_back(n, r);
        continue;
      }
      for (unsigned t = 0; t < trials; ++t) jobs.push_back({n, r, t});
    }
  }

  result.records.resize(2 * jobs.size());
  const long count = static_cast<long>(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (long j = 0; j < count; ++j) {
    const Job& job = jobs[static_cast<std::size_t>(j)];
    const Instance inst = gen_instance(job.n, job.r, Position::general(), trial_seed(seed, job.n, job.r, job.trial));

    BenchRecord terr{job.n, job.r, job.trial, "terracini", 0, 0.0, ""};
    Verdict verdict;
    terr.wall_ms = time_ms([&] { verdict = identify(inst, {.diagnostics = false, .serial = true}); });
    terr.mults = verdict.total_ops.multiplications;
    terr.verdict = std::string(to_string(verdict.kind));

    BenchRecord kr{job.n, job.r, job.trial, "kruskal", 0, 0.0, ""};
    KruskalCertificate cert;
    kr.wall_ms = time_ms([&] { cert = kruskal_certificate(inst, true); });
    kr.mults = cert.ops.multiplications;
    kr.verdict = cert.identifiable ? "identifiable" : "inconclusive";

    result.records[2 * static_cast<std::size_t>(j)] = std::move(terr);
    result.records[2 * static_cast<std::size_t>(j) + 1] = std::move(kr);
  }

  std::map<std::pair<unsigned, std::string>, std::pair<std::vector<double>, std::vector<double>>> series;
  for (const auto& rec : result.records) {
    auto& s = series[{rec.n, rec.method}];
    s.first.push_back(static_cast<double>(rec.r));
    s.second.push_back(static_cast<double>(std::max<std::uint64_t>(rec.mults, 1)));
  }
  for (const auto& [key, s] : series) {
    result.slopes.push_back({key.first, key.second, fit_loglog_slope(s.first, s.second), s.first.size()});
  }
  return result;
}

void write_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << "n,r,trial,method,mults,wall_ms,verdict\n";
  for (const auto& rec : records) {
    out << rec.n << ',' << rec.r << ',' << rec.trial << ',' << rec.method << ',' << rec.mults << ','
        << std::fixed << std::setprecision(3) << rec.wall_ms << std::defaultfloat << ',' << rec.verdict << '\n';
  }
}

void write_summary(std::ostream& out, const BenchResult& result) {
  std::map<std::tuple<unsigned, std::size_t, std::string>, std::pair<double, double>> means;
  std::map<std::tuple<unsigned, std::size_t, std::string>, std::size_t> counts;
  for (const auto& rec : result.records) {
    auto& m = means[{rec.n, rec.r, rec.method}];
    m.first += static_cast<double>(rec.mults);
    m.second += rec.wall_ms;
    ++counts[{rec.n, rec.r, rec.method}];
  }
  out << std::left << std::setw(4) << "n" << std::setw(5) << "r" << std::setw(11) << "method" << std::right
      << std::setw(16) << "mean mults" << std::setw(14) << "mean ms" << '\n';
  for (const auto& [key, m] : means) {
    const double c = static_cast<double>(counts[key]);
    out << std::left << std::setw(4) << std::get<0>(key) << std::setw(5) << std::get<1>(key) << std::setw(11)
        << std::get<2>(key) << std::right << std::setw(16) << std::fixed << std::setprecision(1) << m.first / c
        << std::setw(14) << std::setprecision(3) << m.second / c << std::defaultfloat << '\n';
  }
  for (const auto& fit : result.slopes) {
    out << "slope n=" << fit.n << ' ' << fit.method << ": " << std::fixed << std::setprecision(3) << fit.slope
        << std::defaultfloat << " (" << fit.samples << " samples)\n";
  }
  for (const auto& [n, r] : result.skipped) {
    out << "skipped n=" << n << " r=" << r << ": outside 1 <= r <= 11 + 3n\n";
  }
}

}  // namespace waring
