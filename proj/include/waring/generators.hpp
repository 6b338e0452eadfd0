#pragma once

#include "waring/form.hpp"
#include "waring/instance.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace waring {

struct Position {
  enum class Kind { General, Collinear, Conic, Cubic };
  Kind kind = Kind::General;
  /// Number of special points for Collinear and Conic.
  std::size_t special = 0;

  static Position general() { return {}; }
  static Position collinear(std::size_t s) { return {Kind::Collinear, s}; }
  static Position conic(std::size_t s) { return {Kind::Conic, s}; }
  static Position cubic() { return {Kind::Cubic, 0}; }

  /// Accepts "general", "cubic", "collinear(5)", "collinear:5", "conic(9)", "conic:9".
  static Position parse(std::string_view text);
  std::string to_string() const;
};

struct GenOptions {
  /// Allow r > 11 + 3n.
  bool allow_out_of_range = false;
};

/// Seeded instance of degree 8 + 2n with r points.
///
/// general: coordinates in [-20, 20], no three collinear, no six on a conic.
/// collinear(s): s points on a random line, the others general and off it.
/// conic(s): s points of x^2 + y^2 = z^2 from (q^2 - p^2 : 2pq : q^2 + p^2),
/// the others general and off it.
/// cubic: all points (t^2 : t^3 : 1) on x^3 = y^2 z, distinct nonzero t.
/// Coefficients are nonzero integers in [-9, 9]. Rejection loops give up
/// with InvalidRequest after 10000 attempts.
Instance gen_instance(unsigned n, std::size_t r, const Position& position, std::uint64_t seed,
                      const GenOptions& options = {});

struct DoubleDecomposition {
  Instance a;
  Instance b;
  Form tensor;
};

/// Two disjoint length-r decompositions of one form of degree d supported on
/// a line. The 2r points of A and B are placed on a random line; since
/// 2r > d + 1 their d-th powers satisfy a linear relation, and the relation
/// splits into T = sum over A = -(sum over B). Supports are resampled until
/// every coefficient of the relation is nonzero. Requires 2r > d + 1 >= r.
DoubleDecomposition gen_double_decomposition_fixture(unsigned d, std::size_t r, std::uint64_t seed);

}  // namespace waring
