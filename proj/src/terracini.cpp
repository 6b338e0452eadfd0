#include "waring/terracini.hpp"

#include "waring/error.hpp"
#include "waring/identify.hpp"
#include "waring/linalg.hpp"

#include <vector>

namespace waring {

Matrix terracini_matrix(std::span<const Coords> linear_forms, unsigned d) {
  if (d < 1) throw Error(ErrorKind::InvalidInstance, "Terracini matrix needs degree >= 1");
  Matrix out(0, basis_size(d));
  for (const auto& l : linear_forms) {
    const Form lower = power_form(l, d - 1);
    for (unsigned j = 0; j < 3; ++j) out.append_row(multiply_by_variable(lower, j).coeffs());
  }
  return out;
}

Matrix terracini_matrix(const Instance& inst) {
  std::vector<Coords> forms;
  forms.reserve(inst.points.size());
  for (const auto& p : inst.points) forms.push_back(p.as_scalars());
  return terracini_matrix(forms, inst.degree);
}

namespace {

TerraciniReport dimension_impl(const Instance& inst, bool serial) {
  if (inst.degree < 2) {
    throw Error(ErrorKind::InvalidInstance, "Terracini dimension needs degree >= 2, got " + std::to_string(inst.degree));
  }
  TerraciniReport out;
  out.r = inst.length();
  out.d = inst.degree;
  const Matrix m = terracini_matrix(inst);
  const RankResult rr = serial ? rank_serial(m) : rank(m);
  out.q = rr.rank;
  out.ops = rr.ops;
  out.projective_dimension = static_cast<long>(out.q) - 1;
  out.expected = 3 * out.r - 1;
  out.full = out.q == 3 * out.r;
  return out;
}

}  // namespace

TerraciniReport terracini_dimension(const Instance& inst) { return dimension_impl(inst, false); }

TerraciniReport terracini_dimension_serial(const Instance& inst) { return dimension_impl(inst, true); }

bool terracini_test(const Instance& inst) {
  try {
    validate_instance(inst);
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidInstance, e.what());
  }
  if (!non_redundant(inst).non_redundant) {
    throw Error(ErrorKind::InvalidInstance, "the decomposition is redundant: v_d(A) is linearly dependent");
  }
  return terracini_dimension(inst).full;
}

}  // namespace waring
