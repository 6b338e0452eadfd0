#include "waring/matrix.hpp"

#include "waring/error.hpp"

namespace waring {

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  Matrix out;
  for (const auto& r : rows) out.append_row(r);
  return out;
}

void Matrix::append_row(std::span<const Scalar> values) {
  if (rows_ == 0 && entries_.empty()) cols_ = values.size();
  if (values.size() != cols_) {
    throw Error(ErrorKind::DimensionError,
                "row of length " + std::to_string(values.size()) + " for a matrix with " + std::to_string(cols_) +
                    " columns");
  }
  entries_.insert(entries_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> indices) const {
  Matrix out(indices.size(), cols_);
  for (std::size_t k = 0; k < indices.size(); ++k) {
    const auto src = row(indices[k]);
    std::copy(src.begin(), src.end(), out.row(k).begin());
  }
  return out;
}

}  // namespace waring
