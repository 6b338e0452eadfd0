#include "waring/linalg.hpp"

#include "waring/error.hpp"
#include "waring/point.hpp"

#include <omp.h>

namespace waring {

namespace {

// Below this many entry updates per pivot step the parallel region costs
// more than it saves.
constexpr std::size_t kParallelUpdateThreshold = 256;

struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> a;

  Integer& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
};

// Scales every row by the lcm of its denominators; rank is unchanged.
IntMatrix clear_denominators(const Matrix& m) {
  IntMatrix out{m.rows(), m.cols(), std::vector<Integer>(m.rows() * m.cols())};
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer lcm = 1;
    for (const auto& x : m.row(i)) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Scalar& x = m(i, j);
      out.at(i, j) = x.get_num() * (lcm / x.get_den());
    }
  }
  return out;
}

// Updates row i against pivot row p: a[i][j] = (piv a[i][j] - a[i][c] a[p][j]) / prev.
// Returns the number of counted operations.
std::uint64_t eliminate_row(IntMatrix& m, std::size_t i, std::size_t p, std::size_t c, const Integer& prev,
                            Integer& scratch) {
  const Integer& piv = m.at(p, c);
  Integer& lead = m.at(i, c);
  std::uint64_t ops = 0;
  const bool lead_zero = (lead == 0);
  for (std::size_t j = c + 1; j < m.cols; ++j) {
    Integer& x = m.at(i, j);
    if (lead_zero) {
      x *= piv;
      ops += 1;
    } else {
      x *= piv;
      scratch = lead * m.at(p, j);
      x -= scratch;
      ops += 2;
    }
    if (prev != 1) {
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      ops += 1;
    }
  }
  lead = 0;
  return ops;
}

RankResult bareiss_rank(const Matrix& input, bool parallel) {
  RankResult result;
  if (input.rows() == 0 || input.cols() == 0) return result;
  IntMatrix m = clear_denominators(input);

  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m.at(p, c) == 0) ++p;
    if (p == m.rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    }

    const std::size_t below = m.rows - r - 1;
    const std::size_t width = m.cols - c - 1;
    std::uint64_t step_ops = 0;
    const bool go_parallel = parallel && below > 1 && below * width >= kParallelUpdateThreshold;
    const long first = static_cast<long>(r + 1);
    const long last = static_cast<long>(m.rows);
#pragma omp parallel if (go_parallel)
    {
      Integer scratch;
#pragma omp for schedule(static) reduction(+ : step_ops)
      for (long i = first; i < last; ++i) {
        step_ops += eliminate_row(m, static_cast<std::size_t>(i), r, c, prev, scratch);
      }
    }
    result.ops.multiplications += step_ops;
    result.ops.elimination_steps += below;
    prev = m.at(r, c);
    ++r;
  }
  result.rank = r;
  return result;
}

}  // namespace

RankResult rank(const Matrix& m) { return bareiss_rank(m, true); }

RankResult rank_serial(const Matrix& m) { return bareiss_rank(m, false); }

std::size_t kernel_dim(const Matrix& m) { return m.cols() - rank(m).rank; }

std::vector<std::vector<Integer>> kernel_basis(const Matrix& input) {
  // Reduced row echelon form over the rationals.
  Matrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const Scalar inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Scalar f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Integer>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols);
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -m(k, free);

    Integer lcm = 1;
    for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> ints(cols);
    for (std::size_t j = 0; j < cols; ++j) ints[j] = v[j].get_num() * (lcm / v[j].get_den());
    make_primitive(ints);
    basis.push_back(std::move(ints));
  }
  return basis;
}

bool is_in_span(std::span<const Scalar> v, const Matrix& m) {
  if (v.size() != m.cols()) {
    throw Error(ErrorKind::DimensionError, "vector of length " + std::to_string(v.size()) + " against " +
                                               std::to_string(m.cols()) + " columns");
  }
  Matrix extended = m;
  extended.append_row(v);
  return rank(extended).rank == rank(m).rank;
}

}  // namespace waring
