#pragma once

#include "waring/scalar.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace waring {

/// Work performed by one elimination. A counted multiplication is one scalar
/// product or exact division inside the elimination loop.
struct OpCounter {
  std::uint64_t multiplications = 0;
  std::uint64_t elimination_steps = 0;

  OpCounter& operator+=(const OpCounter& o) noexcept {
    multiplications += o.multiplications;
    elimination_steps += o.elimination_steps;
    return *this;
  }
  friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Scalar> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
  std::span<Scalar> row(std::size_t i) { return {entries_.data() + i * cols_, cols_}; }

  /// Appends a row; on an empty 0x0 matrix this fixes the column count.
  void append_row(std::span<const Scalar> values);

  Matrix transpose() const;
  /// Rows at the given indices, in the given order.
  Matrix select_rows(std::span<const std::size_t> indices) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

}  // namespace waring
