#pragma once

#include "waring/hilbert.hpp"
#include "waring/instance.hpp"
#include "waring/matrix.hpp"

#include <optional>
#include <vector>

namespace waring {

struct KruskalReport {
  unsigned degree = 1;
  std::size_t k = 0;
  /// min(ℓ(Z), C(d+2,2))
  std::size_t bound = 0;
  std::uint64_t subsets_tested = 0;
  /// A dependent subset of size k+1 (indices into Z), present iff k < bound.
  std::optional<std::vector<std::size_t>> witness;
  OpCounter ops;
};

/// Kruskal rank of the Veronese image v_d(Z).
///
/// Sizes are tried from the bound downward; subsets of one size are visited
/// in lexicographic order and the scan of a size stops at the first dependent
/// subset. Blocks of subsets are ranked in parallel, but the reported
/// witness, subset count and operation count are those of the serial scan.
KruskalReport kruskal_rank_d(const PointSet& z, unsigned d);

/// Serial reference for kruskal_rank_d.
KruskalReport kruskal_rank_d_serial(const PointSet& z, unsigned d);

inline KruskalReport kruskal_rank(const PointSet& z) { return kruskal_rank_d(z, 1); }

struct Partition {
  unsigned a = 0;
  unsigned b = 0;
  unsigned c = 0;
};

struct ReshapedKruskalResult {
  bool passes = false;
  std::size_t r = 0;
  Partition partition;
  KruskalReport ka;
  KruskalReport kb;
  KruskalReport kc;
};

/// Reshaped Kruskal criterion r <= (k_a + k_b + k_c - 2) / 2, compared as
/// 2r <= k_a + k_b + k_c - 2. Throws InvalidPartition unless a + b + c = d
/// with all parts positive. Equal parts share one Kruskal computation.
ReshapedKruskalResult reshaped_kruskal_check(const PointSet& z, unsigned d, Partition partition);

/// Baseline certificate for d = 8 + 2n, r <= 11 + 3n, using the partition
/// d = (n+3) + (n+3) + 2.
struct KruskalCertificate {
  unsigned n = 0;
  std::size_t r = 0;
  KruskalReport k2;
  KruskalReport k_high;  // degree n + 3
  bool k2_condition = false;    // k_2 == min(6, r)
  bool high_condition = false;  // k_{n+3} >= min(r, 3n + 9)
  bool reshaped_bound = false;  // 2r <= 2 k_{n+3} + k_2 - 2
  bool identifiable = false;    // k2_condition && high_condition
  OpCounter ops;
};

/// Throws UnsupportedDegree when d is not 8 + 2n and LengthOutOfRange when
/// r > 11 + 3n.
KruskalCertificate kruskal_certificate(const Instance& inst, bool serial = false);

}  // namespace waring
