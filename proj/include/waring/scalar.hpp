#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace waring {

/// Exact rational scalar. GMP keeps it canonical: reduced, positive denominator.
using Scalar = mpq_class;
using Integer = mpz_class;

/// "p" when the denominator is one, otherwise "p/q".
std::string to_string(const Scalar& value);

/// Parses "p", "-p" or "p/q". Rejects zero denominators, decimals and exponents.
Scalar parse_scalar(std::string_view text);

Integer binomial(unsigned n, unsigned k);

/// Number of degree-d monomials in three variables, C(d+2, 2).
constexpr std::size_t basis_size(unsigned degree) {
  return static_cast<std::size_t>(degree + 2) * (degree + 1) / 2;
}

}  // namespace waring
