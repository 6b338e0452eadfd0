#pragma once

#include "waring/matrix.hpp"

#include <span>
#include <vector>

namespace waring {

struct RankResult {
  std::size_t rank = 0;
  OpCounter ops;
};

/// Exact rank by fraction-free (Bareiss) elimination. Each row is first
/// scaled to integers; pivots are the first nonzero entry of the current
/// column. Row updates of one pivot step run in parallel under OpenMP when
/// the remaining block is large enough; the rank and the operation counts do
/// not depend on the thread count.
RankResult rank(const Matrix& m);

/// Single-threaded reference for rank(); same pivots, same counts.
RankResult rank_serial(const Matrix& m);

std::size_t kernel_dim(const Matrix& m);

/// Basis of the right kernel, each vector scaled to a primitive integer
/// vector with positive leading entry. Basis vectors come from the free
/// columns of the reduced row echelon form, in increasing column order.
std::vector<std::vector<Integer>> kernel_basis(const Matrix& m);

/// Whether v lies in the row span of m. Throws DimensionError on a length
/// mismatch.
bool is_in_span(std::span<const Scalar> v, const Matrix& m);

}  // namespace waring
