#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace waring {

struct BenchRecord {
  unsigned n = 0;
  std::size_t r = 0;
  unsigned trial = 0;
  std::string method;  // "terracini" or "kruskal"
  std::uint64_t mults = 0;
  double wall_ms = 0.0;
  std::string verdict;
};

struct SlopeFit {
  unsigned n = 0;
  std::string method;
  /// Least-squares slope of log(mults) against log(r).
  double slope = 0.0;
  std::size_t samples = 0;
};

struct BenchResult {
  std::vector<BenchRecord> records;
  std::vector<SlopeFit> slopes;
  /// (n, r) pairs skipped because r > 11 + 3n.
  std::vector<std::pair<unsigned, std::size_t>> skipped;
};

/// For every (n, r, trial) a general instance is generated and certified both
/// by the Terracini pipeline and by the Kruskal baseline, counting
/// multiplications and wall time of each. Trials run concurrently; each trial
/// is timed on its own thread with the serial kernels, and records come out
/// in (n, r, trial, method) order.
BenchResult run_bench(std::span<const unsigned> n_values, std::span<const std::size_t> r_values,
                      unsigned trials, std::uint64_t seed);

/// Columns: n,r,trial,method,mults,wall_ms,verdict
void write_csv(std::ostream& out, std::span<const BenchRecord> records);
void write_summary(std::ostream& out, const BenchResult& result);

double fit_loglog_slope(std::span<const double> xs, std::span<const double> ys);

}  // namespace waring
