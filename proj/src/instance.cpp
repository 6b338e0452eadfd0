#include "waring/instance.hpp"

#include "waring/error.hpp"

namespace waring {

Form compose_tensor(const Instance& inst) {
  if (inst.points.size() != inst.coefficients.size()) {
    throw Error(ErrorKind::InvalidInstance, std::to_string(inst.points.size()) + " points but " +
                                                std::to_string(inst.coefficients.size()) + " coefficients");
  }
  Form out(inst.degree);
  for (std::size_t i = 0; i < inst.points.size(); ++i) {
    out += inst.coefficients[i] * power_form(inst.points[i], inst.degree);
  }
  return out;
}

}  // namespace waring
