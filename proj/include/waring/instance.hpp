#pragma once

#include "waring/form.hpp"
#include "waring/point.hpp"
#include "waring/scalar.hpp"

#include <vector>

namespace waring {

/// A decomposition T = a_1 L_1^d + ... + a_r L_r^d, given by its points and
/// coefficients. Instances with different coefficient lists are distinct.
struct Instance {
  unsigned degree = 0;
  std::vector<ProjPoint> points;
  std::vector<Scalar> coefficients;

  std::size_t length() const noexcept { return points.size(); }
  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Sum of a_i * power_form(P_i, degree). Throws InvalidInstance when the
/// point and coefficient lists differ in length.
Form compose_tensor(const Instance& inst);

}  // namespace waring
