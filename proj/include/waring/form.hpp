#pragma once

#include "waring/point.hpp"
#include "waring/scalar.hpp"

#include <span>
#include <vector>

namespace waring {

/// Exponent triple x^i y^j z^k.
struct Monomial {
  unsigned x = 0;
  unsigned y = 0;
  unsigned z = 0;

  unsigned degree() const noexcept { return x + y + z; }
  unsigned operator[](unsigned j) const noexcept { return j == 0 ? x : (j == 1 ? y : z); }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// All degree-d monomials in graded-lex order with x > y > z, i.e. exponent
/// triples in lexicographically descending order. Length C(d+2, 2).
std::vector<Monomial> monomial_basis(unsigned degree);

/// Position of `m` inside monomial_basis(m.degree()).
std::size_t monomial_index(const Monomial& m) noexcept;

/// Value of the monomial at the given coordinates (plain, no multinomial weight).
Scalar evaluate_monomial(const Monomial& m, const Coords& at);

/// Homogeneous ternary form stored as a dense coefficient vector over
/// monomial_basis(degree).
class Form {
 public:
  Form() : Form(0u) {}
  explicit Form(unsigned degree);
  Form(unsigned degree, std::vector<Scalar> coeffs);

  unsigned degree() const noexcept { return degree_; }
  std::span<const Scalar> coeffs() const noexcept { return coeffs_; }
  const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }
  Scalar& operator[](std::size_t i) { return coeffs_[i]; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  bool is_zero() const;
  Scalar evaluate(const Coords& at) const;
  Scalar evaluate(const ProjPoint& at) const { return evaluate(at.as_scalars()); }

  Form& operator+=(const Form& other);
  Form& operator*=(const Scalar& factor);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator*(const Scalar& s, Form f) { return f *= s; }
  friend bool operator==(const Form& a, const Form& b) {
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  unsigned degree_;
  std::vector<Scalar> coeffs_;
};

/// Coefficients of L^e for L = a x + b y + c z: the monomial x^i y^j z^k gets
/// multinomial(e; i, j, k) a^i b^j c^k. With canonical coordinates this is the
/// representative of the Veronese image v_e(P).
Form power_form(const Coords& linear_form, unsigned e);
Form power_form(const ProjPoint& p, unsigned e);

/// x_j * F, a form of degree deg(F) + 1.
Form multiply_by_variable(const Form& f, unsigned j);

/// Product of two forms; used for building degenerate conic witnesses.
Form multiply(const Form& a, const Form& b);

}  // namespace waring
