#pragma once

#include "waring/scalar.hpp"

#include <array>
#include <span>
#include <string>

namespace waring {

using Coords = std::array<Scalar, 3>;

/// A point of the projective plane, equivalently a linear form up to scale.
///
/// Coordinates are kept canonical: a primitive integer vector whose first
/// nonzero entry is positive. Two points are equal iff their canonical
/// coordinates are equal.
class ProjPoint {
 public:
  ProjPoint(long x, long y, long z);

  const std::array<Integer, 3>& coords() const noexcept { return coords_; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Coords as_scalars() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.coords_ < b.coords_; }

  std::string to_string() const;

 private:
  explicit ProjPoint(std::array<Integer, 3> canonical) : coords_(std::move(canonical)) {}
  friend ProjPoint normalize_point(const Coords& coords);

  std::array<Integer, 3> coords_;
};

/// Clears denominators, divides by the gcd and fixes the sign.
/// Throws Error(InvalidPoint) on the zero vector.
ProjPoint normalize_point(const Coords& coords);

/// Canonical primitive form of an integer vector: gcd 1, first nonzero entry
/// positive. The zero vector is returned unchanged.
void make_primitive(std::span<Integer> v);

}  // namespace waring
