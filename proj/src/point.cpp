#include "waring/point.hpp"

#include "waring/error.hpp"

namespace waring {

void make_primitive(std::span<Integer> v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) return;
  for (const auto& x : v) {
    if (x != 0) {
      if (x < 0) g = -g;
      break;
    }
  }
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

ProjPoint normalize_point(const Coords& coords) {
  if (coords[0] == 0 && coords[1] == 0 && coords[2] == 0) {
    throw Error(ErrorKind::InvalidPoint, "all coordinates are zero");
  }
  Integer lcm = 1;
  for (const auto& c : coords) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::array<Integer, 3> ints;
  for (std::size_t i = 0; i < 3; ++i) {
    ints[i] = coords[i].get_num() * (lcm / coords[i].get_den());
  }
  make_primitive(ints);
  return ProjPoint(std::move(ints));
}

ProjPoint::ProjPoint(long x, long y, long z)
    : ProjPoint(normalize_point({Scalar(x), Scalar(y), Scalar(z)})) {}

Coords ProjPoint::as_scalars() const {
  return {Scalar(coords_[0]), Scalar(coords_[1]), Scalar(coords_[2])};
}

std::string ProjPoint::to_string() const {
  return "(" + coords_[0].get_str() + ":" + coords_[1].get_str() + ":" + coords_[2].get_str() + ")";
}

}  // namespace waring
