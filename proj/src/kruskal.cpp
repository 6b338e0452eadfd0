#include "waring/kruskal.hpp"

#include "waring/error.hpp"
#include "waring/form.hpp"
#include "waring/linalg.hpp"
#include "combinations.hpp"

#include <algorithm>
#include <map>

namespace waring {

namespace {

using detail::first_combination;
using detail::next_combination;

constexpr std::size_t kBlockSize = 128;

Matrix veronese_rows(const PointSet& z, unsigned d) {
  Matrix out;
  for (const auto& p : z) out.append_row(power_form(p, d).coeffs());
  return out;
}

struct SizeScan {
  bool all_independent = true;
  std::uint64_t tested = 0;
  OpCounter ops;
  std::vector<std::size_t> witness;
};

// Ranks blocks of s-subsets concurrently, then replays each block in order so
// that the stopping point and counts match the serial scan exactly.
SizeScan scan_size_blocked(const Matrix& images, std::size_t s) {
  SizeScan scan;
  std::vector<std::size_t> combo = first_combination(s);
  bool more = true;
  std::vector<std::vector<std::size_t>> block;
  std::vector<RankResult> ranks;
  while (more) {
    block.clear();
    while (more && block.size() < kBlockSize) {
      block.push_back(combo);
      more = next_combination(combo, images.rows());
    }
    ranks.assign(block.size(), RankResult{});
    const long count = static_cast<long>(block.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (long b = 0; b < count; ++b) {
      ranks[static_cast<std::size_t>(b)] = rank_serial(images.select_rows(block[static_cast<std::size_t>(b)]));
    }
    for (std::size_t b = 0; b < block.size(); ++b) {
      ++scan.tested;
      scan.ops += ranks[b].ops;
      if (ranks[b].rank < s) {
        scan.all_independent = false;
        scan.witness = block[b];
        return scan;
      }
    }
  }
  return scan;
}

SizeScan scan_size_serial(const Matrix& images, std::size_t s) {
  SizeScan scan;
  std::vector<std::size_t> combo = first_combination(s);
  do {
    const RankResult rr = rank_serial(images.select_rows(combo));
    ++scan.tested;
    scan.ops += rr.ops;
    if (rr.rank < s) {
      scan.all_independent = false;
      scan.witness = combo;
      return scan;
    }
  } while (next_combination(combo, images.rows()));
  return scan;
}

template <typename Scan>
KruskalReport kruskal_impl(const PointSet& z, unsigned d, Scan scan_size) {
  if (d < 1) throw Error(ErrorKind::InvalidRequest, "Kruskal rank needs Veronese degree >= 1");
  KruskalReport report;
  report.degree = d;
  report.bound = std::min(z.size(), basis_size(d));
  if (z.empty()) return report;

  const Matrix images = veronese_rows(z, d);
  std::optional<std::vector<std::size_t>> last_dependent;
  for (std::size_t s = report.bound; s >= 1; --s) {
    SizeScan scan = scan_size(images, s);
    report.subsets_tested += scan.tested;
    report.ops += scan.ops;
    if (scan.all_independent) {
      report.k = s;
      break;
    }
    last_dependent = std::move(scan.witness);
  }
  if (report.k < report.bound) report.witness = std::move(last_dependent);
  return report;
}

}  // namespace

KruskalReport kruskal_rank_d(const PointSet& z, unsigned d) { return kruskal_impl(z, d, scan_size_blocked); }

KruskalReport kruskal_rank_d_serial(const PointSet& z, unsigned d) { return kruskal_impl(z, d, scan_size_serial); }

ReshapedKruskalResult reshaped_kruskal_check(const PointSet& z, unsigned d, Partition partition) {
  if (partition.a < 1 || partition.b < 1 || partition.c < 1 || partition.a + partition.b + partition.c != d) {
    throw Error(ErrorKind::InvalidPartition, "(" + std::to_string(partition.a) + "," + std::to_string(partition.b) +
                                                 "," + std::to_string(partition.c) + ") is not a partition of " +
                                                 std::to_string(d) + " into positive parts");
  }
  std::map<unsigned, KruskalReport> cache;
  auto report_for = [&](unsigned degree) -> const KruskalReport& {
    auto it = cache.find(degree);
    if (it == cache.end()) it = cache.emplace(degree, kruskal_rank_d(z, degree)).first;
    return it->second;
  };

  ReshapedKruskalResult out;
  out.r = z.size();
  out.partition = partition;
  out.ka = report_for(partition.a);
  out.kb = report_for(partition.b);
  out.kc = report_for(partition.c);
  const long sum = static_cast<long>(out.ka.k + out.kb.k + out.kc.k);
  out.passes = 2 * static_cast<long>(out.r) <= sum - 2;
  return out;
}

KruskalCertificate kruskal_certificate(const Instance& inst, bool serial) {
  if (inst.degree < 8 || inst.degree % 2 != 0) {
    throw Error(ErrorKind::UnsupportedDegree, "degree " + std::to_string(inst.degree) + " is not 8 + 2n");
  }
  KruskalCertificate out;
  out.n = (inst.degree - 8) / 2;
  out.r = inst.length();
  if (out.r > 11 + 3 * static_cast<std::size_t>(out.n)) {
    throw Error(ErrorKind::LengthOutOfRange, "r = " + std::to_string(out.r) + " exceeds 11 + 3n = " +
                                                 std::to_string(11 + 3 * out.n));
  }
  const PointSet z(inst.points);
  const auto compute = serial ? kruskal_rank_d_serial : kruskal_rank_d;
  out.k2 = compute(z, 2);
  out.k_high = compute(z, out.n + 3);
  out.ops = out.k2.ops;
  out.ops += out.k_high.ops;

  const std::size_t r = out.r;
  out.k2_condition = out.k2.k == std::min<std::size_t>(6, r);
  out.high_condition = out.k_high.k >= std::min<std::size_t>(r, 3 * out.n + 9);
  out.reshaped_bound = 2 * static_cast<long>(r) <= 2 * static_cast<long>(out.k_high.k) +
                                                       static_cast<long>(out.k2.k) - 2;
  out.identifiable = out.k2_condition && out.high_condition;
  return out;
}

}  // namespace waring
