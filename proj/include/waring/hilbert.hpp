#pragma once

#include "waring/matrix.hpp"
#include "waring/point.hpp"

#include <optional>
#include <vector>

namespace waring {

/// Finite set of distinct projective points, kept in insertion order.
class PointSet {
 public:
  PointSet() = default;
  /// Throws DuplicatePoint if two entries coincide.
  explicit PointSet(std::vector<ProjPoint> points);

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const ProjPoint& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<ProjPoint>& points() const noexcept { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  PointSet without(std::size_t index) const;
  PointSet subset(std::span<const std::size_t> indices) const;
  /// Union keeping this set's order first; shared points appear once.
  PointSet united(const PointSet& other) const;

 private:
  std::vector<ProjPoint> points_;
};

/// Hilbert function h and first difference Dh of a point set, for degrees
/// 0..stabilization. Values outside the stored range follow the usual
/// conventions: h(d) = 0 and Dh(d) = 0 for d < 0; beyond the stored range h
/// stays at its last value and Dh is 0 (valid when `complete`).
struct HilbertProfile {
  std::vector<std::size_t> h;
  std::vector<long> dh;
  unsigned stabilization = 0;
  /// True when h reached the cardinality of the set.
  bool complete = false;

  std::size_t h_at(long d) const;
  long dh_at(long d) const;
};

/// ℓ(Z) x C(d+2,2) matrix; the row of P holds every degree-d monomial
/// evaluated at the canonical coordinates of P.
Matrix evaluation_matrix(const PointSet& z, unsigned d);

std::size_t hilbert_function(const PointSet& z, unsigned d);

/// Computes h from degree 0 upward until h equals ℓ(Z) (at the latest in
/// degree ℓ(Z) - 1), or until d_max when given.
HilbertProfile hilbert_profile(const PointSet& z, std::optional<unsigned> d_max = std::nullopt);

/// dim I_Z(d) = C(d+2,2) - h_Z(d).
std::size_t ideal_dim(const PointSet& z, unsigned d);

/// CB(d): every degree-d form through Z minus one point passes through that
/// point. Checked as h_{Z\P}(d) == h_Z(d) for every P; the per-point checks
/// run in parallel. Throws EmptyPointSet on the empty set.
bool cayley_bacharach(const PointSet& z, unsigned d);

/// Whether Dh(0)+...+Dh(j) <= Dh(i+1-j)+...+Dh(i+1) for all 0 <= j <= i+1.
bool gkr_inequality_holds(const PointSet& z, unsigned i);
bool gkr_inequality_holds(const HilbertProfile& profile, unsigned i);

}  // namespace waring
