#pragma once

#include "waring/instance.hpp"
#include "waring/matrix.hpp"

#include <span>

namespace waring {

struct TerraciniReport {
  std::size_t r = 0;
  unsigned d = 0;
  /// Rank of the Terracini matrix.
  std::size_t q = 0;
  long projective_dimension = -1;
  std::size_t expected = 0;  // 3r - 1
  bool full = false;         // q == 3r
  OpCounter ops;
};

/// 3r x C(d+2,2) matrix; row 3i + j holds the coefficients of x_j L_i^(d-1).
/// Its row space is the affine cone over the span of the tangent planes to
/// the Veronese surface at v_d(P_i).
Matrix terracini_matrix(const Instance& inst);

/// Same matrix from raw coordinates, without canonicalizing them.
Matrix terracini_matrix(std::span<const Coords> linear_forms, unsigned d);

/// Throws InvalidInstance when d < 2.
TerraciniReport terracini_dimension(const Instance& inst);
TerraciniReport terracini_dimension_serial(const Instance& inst);

/// The identifiability certificate: true iff q == 3r. Requires a validated,
/// non-redundant instance and throws InvalidInstance otherwise.
bool terracini_test(const Instance& inst);

}  // namespace waring
