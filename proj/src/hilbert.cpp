#include "waring/hilbert.hpp"

#include "waring/error.hpp"
#include "waring/form.hpp"
#include "waring/linalg.hpp"

#include <algorithm>

namespace waring {

PointSet::PointSet(std::vector<ProjPoint> points) : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (points_[i] == points_[j]) {
        throw Error(ErrorKind::DuplicatePoint, "points " + std::to_string(j) + " and " + std::to_string(i) +
                                                   " are both " + points_[i].to_string());
      }
    }
  }
}

PointSet PointSet::without(std::size_t index) const {
  PointSet out;
  out.points_.reserve(points_.size() - 1);
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (i != index) out.points_.push_back(points_[i]);
  return out;
}

PointSet PointSet::subset(std::span<const std::size_t> indices) const {
  PointSet out;
  out.points_.reserve(indices.size());
  for (auto i : indices) out.points_.push_back(points_[i]);
  return out;
}

PointSet PointSet::united(const PointSet& other) const {
  PointSet out = *this;
  for (const auto& p : other.points_) {
    if (std::find(points_.begin(), points_.end(), p) == points_.end()) out.points_.push_back(p);
  }
  return out;
}

std::size_t HilbertProfile::h_at(long d) const {
  if (d < 0 || h.empty()) return 0;
  if (static_cast<std::size_t>(d) >= h.size()) return h.back();
  return h[static_cast<std::size_t>(d)];
}

long HilbertProfile::dh_at(long d) const {
  if (d < 0 || static_cast<std::size_t>(d) >= dh.size()) return 0;
  return dh[static_cast<std::size_t>(d)];
}

Matrix evaluation_matrix(const PointSet& z, unsigned d) {
  const auto basis = monomial_basis(d);
  Matrix out(z.size(), basis.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    const Coords at = z[i].as_scalars();
    for (std::size_t k = 0; k < basis.size(); ++k) out(i, k) = evaluate_monomial(basis[k], at);
  }
  return out;
}

std::size_t hilbert_function(const PointSet& z, unsigned d) { return rank(evaluation_matrix(z, d)).rank; }

HilbertProfile hilbert_profile(const PointSet& z, std::optional<unsigned> d_max) {
  HilbertProfile out;
  const std::size_t ell = z.size();
  if (ell == 0) {
    out.h = {0};
    out.dh = {0};
    out.complete = true;
    return out;
  }
  const unsigned cap = d_max ? std::min<unsigned>(*d_max, static_cast<unsigned>(ell - 1))
                             : static_cast<unsigned>(ell - 1);
  std::size_t previous = 0;
  for (unsigned d = 0;; ++d) {
    const std::size_t h = hilbert_function(z, d);
    out.h.push_back(h);
    out.dh.push_back(static_cast<long>(h) - static_cast<long>(previous));
    previous = h;
    out.stabilization = d;
    if (h == ell) {
      out.complete = true;
      break;
    }
    if (d >= cap) break;
  }
  return out;
}

std::size_t ideal_dim(const PointSet& z, unsigned d) { return basis_size(d) - hilbert_function(z, d); }

bool cayley_bacharach(const PointSet& z, unsigned d) {
  if (z.empty()) throw Error(ErrorKind::EmptyPointSet, "Cayley-Bacharach needs at least one point");
  const std::size_t full = hilbert_function(z, d);
  const long count = static_cast<long>(z.size());
  bool holds = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : holds)
  for (long i = 0; i < count; ++i) {
    holds = holds && hilbert_function(z.without(static_cast<std::size_t>(i)), d) == full;
  }
  return holds;
}

bool gkr_inequality_holds(const HilbertProfile& profile, unsigned i) {
  const long top = static_cast<long>(i) + 1;
  for (long j = 0; j <= top; ++j) {
    long left = 0;
    for (long t = 0; t <= j; ++t) left += profile.dh_at(t);
    long right = 0;
    for (long t = top - j; t <= top; ++t) right += profile.dh_at(t);
    if (left > right) return false;
  }
  return true;
}

bool gkr_inequality_holds(const PointSet& z, unsigned i) { return gkr_inequality_holds(hilbert_profile(z), i); }

}  // namespace waring
