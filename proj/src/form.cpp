#include "waring/form.hpp"

#include "waring/error.hpp"

namespace waring {

std::vector<Monomial> monomial_basis(unsigned degree) {
  std::vector<Monomial> out;
  out.reserve(basis_size(degree));
  for (unsigned i = degree + 1; i-- > 0;) {
    for (unsigned j = degree - i + 1; j-- > 0;) out.push_back({i, j, degree - i - j});
  }
  return out;
}

std::size_t monomial_index(const Monomial& m) noexcept {
  const std::size_t rest = m.degree() - m.x;  // y + z
  return rest * (rest + 1) / 2 + (rest - m.y);
}

Scalar evaluate_monomial(const Monomial& m, const Coords& at) {
  Scalar out = 1;
  for (unsigned v = 0; v < 3; ++v) {
    for (unsigned e = 0; e < m[v]; ++e) out *= at[v];
  }
  return out;
}

Form::Form(unsigned degree) : degree_(degree), coeffs_(basis_size(degree)) {}

Form::Form(unsigned degree, std::vector<Scalar> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != basis_size(degree)) {
    throw Error(ErrorKind::DimensionError, "a degree-" + std::to_string(degree) + " form needs " +
                                               std::to_string(basis_size(degree)) + " coefficients, got " +
                                               std::to_string(coeffs_.size()));
  }
}

bool Form::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

Scalar Form::evaluate(const Coords& at) const {
  Scalar out = 0;
  const auto basis = monomial_basis(degree_);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs_[i] != 0) out += coeffs_[i] * evaluate_monomial(basis[i], at);
  }
  return out;
}

Form& Form::operator+=(const Form& other) {
  if (other.degree_ != degree_) throw Error(ErrorKind::DimensionError, "adding forms of different degrees");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Form& Form::operator*=(const Scalar& factor) {
  for (auto& c : coeffs_) c *= factor;
  return *this;
}

Form power_form(const Coords& l, unsigned e) {
  // Powers of each coordinate, reused across monomials.
  std::array<std::vector<Scalar>, 3> powers;
  for (unsigned v = 0; v < 3; ++v) {
    powers[v].resize(e + 1);
    powers[v][0] = 1;
    for (unsigned k = 1; k <= e; ++k) powers[v][k] = powers[v][k - 1] * l[v];
  }
  Form out(e);
  const auto basis = monomial_basis(e);
  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    const auto& m = basis[idx];
    const Integer multinomial = binomial(e, m.x) * binomial(e - m.x, m.y);
    out[idx] = Scalar(multinomial) * powers[0][m.x] * powers[1][m.y] * powers[2][m.z];
  }
  return out;
}

Form power_form(const ProjPoint& p, unsigned e) { return power_form(p.as_scalars(), e); }

Form multiply_by_variable(const Form& f, unsigned j) {
  if (j > 2) throw Error(ErrorKind::DimensionError, "variable index must be 0, 1 or 2");
  Form out(f.degree() + 1);
  const auto basis = monomial_basis(f.degree());
  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    if (f[idx] == 0) continue;
    Monomial shifted = basis[idx];
    (j == 0 ? shifted.x : (j == 1 ? shifted.y : shifted.z)) += 1;
    out[monomial_index(shifted)] = f[idx];
  }
  return out;
}

Form multiply(const Form& a, const Form& b) {
  Form out(a.degree() + b.degree());
  const auto ba = monomial_basis(a.degree());
  const auto bb = monomial_basis(b.degree());
  for (std::size_t i = 0; i < ba.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t k = 0; k < bb.size(); ++k) {
      if (b[k] == 0) continue;
      const Monomial m{ba[i].x + bb[k].x, ba[i].y + bb[k].y, ba[i].z + bb[k].z};
      out[monomial_index(m)] += a[i] * b[k];
    }
  }
  return out;
}

}  // namespace waring
