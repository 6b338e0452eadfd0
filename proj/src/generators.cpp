#include "waring/generators.hpp"

#include "waring/error.hpp"
#include "waring/hilbert.hpp"
#include "waring/linalg.hpp"
#include "combinations.hpp"

#include <charconv>
#include <random>
#include <set>

namespace waring {

namespace {

constexpr int kCoordRange = 20;
constexpr int kCoeffRange = 9;
constexpr std::size_t kMaxAttempts = 10000;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    rng_.seed(seq);
  }

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  long nonzero(long lo, long hi) {
    for (;;) {
      const long v = uniform(lo, hi);
      if (v != 0) return v;
    }
  }

  std::array<long, 3> coords(long range) {
    for (;;) {
      std::array<long, 3> c{uniform(-range, range), uniform(-range, range), uniform(-range, range)};
      if (c[0] != 0 || c[1] != 0 || c[2] != 0) return c;
    }
  }

  void spend_attempt() {
    if (++attempts_ > kMaxAttempts) {
      throw Error(ErrorKind::InvalidRequest, "sampling gave up after " + std::to_string(kMaxAttempts) + " attempts");
    }
  }

 private:
  std::mt19937_64 rng_;
  std::size_t attempts_ = 0;
};

Integer dot(const std::vector<Integer>& f, const std::vector<Integer>& values) {
  Integer s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * values[i];
  return s;
}

std::vector<Integer> monomial_values(const ProjPoint& p, unsigned d) {
  std::vector<Integer> out;
  for (const auto& m : monomial_basis(d)) {
    Integer v = 1;
    for (unsigned k = 0; k < 3; ++k) {
      Integer pw;
      mpz_pow_ui(pw.get_mpz_t(), p[k].get_mpz_t(), m[k]);
      v *= pw;
    }
    out.push_back(std::move(v));
  }
  return out;
}

// Accepted points plus every line through two of them and every unique conic
// through five of them. A new point is general with respect to the set when
// it is off all of these curves.
class GeneralPositionGuard {
 public:
  bool contains(const ProjPoint& p) const {
    for (const auto& q : points_)
      if (q == p) return true;
    return false;
  }

  bool is_general(const ProjPoint& p) const {
    if (contains(p)) return false;
    const auto v1 = monomial_values(p, 1);
    for (const auto& l : lines_)
      if (dot(l, v1) == 0) return false;
    const auto v2 = monomial_values(p, 2);
    for (const auto& c : conics_)
      if (dot(c, v2) == 0) return false;
    return true;
  }

  void add(const ProjPoint& p) {
    const std::size_t k = points_.size();
    for (std::size_t i = 0; i < k; ++i) {
      const auto& q = points_[i];
      std::vector<Integer> l = {q[1] * p[2] - q[2] * p[1], q[2] * p[0] - q[0] * p[2], q[0] * p[1] - q[1] * p[0]};
      make_primitive(l);
      if (line_keys_.insert(key(l)).second) lines_.push_back(std::move(l));
    }
    points_.push_back(p);
    if (k < 4) return;
    // Conics through p and each 4-subset of the earlier points.
    std::vector<std::size_t> combo = detail::first_combination(4);
    do {
      std::vector<std::size_t> five = combo;
      five.push_back(k);
      auto kernel = kernel_basis(evaluation_matrix(PointSet(points_).subset(five), 2));
      if (kernel.size() == 1 && conic_keys_.insert(key(kernel.front())).second) {
        conics_.push_back(std::move(kernel.front()));
      }
    } while (detail::next_combination(combo, k));
  }

  const std::vector<ProjPoint>& points() const { return points_; }

 private:
  static std::string key(const std::vector<Integer>& v) {
    std::string s;
    for (const auto& x : v) s += x.get_str() + ",";
    return s;
  }

  std::vector<ProjPoint> points_;
  std::vector<std::vector<Integer>> lines_;
  std::vector<std::vector<Integer>> conics_;
  std::set<std::string> line_keys_;
  std::set<std::string> conic_keys_;
};

void fill_general(GeneralPositionGuard& guard, std::size_t r, Sampler& rng) {
  while (guard.points().size() < r) {
    rng.spend_attempt();
    const auto c = rng.coords(kCoordRange);
    const ProjPoint p(c[0], c[1], c[2]);
    if (guard.is_general(p)) guard.add(p);
  }
}

std::pair<ProjPoint, ProjPoint> random_independent_pair(Sampler& rng) {
  for (;;) {
    rng.spend_attempt();
    const auto u = rng.coords(kCoordRange);
    const auto v = rng.coords(kCoordRange);
    const long cx = u[1] * v[2] - u[2] * v[1];
    const long cy = u[2] * v[0] - u[0] * v[2];
    const long cz = u[0] * v[1] - u[1] * v[0];
    if (cx != 0 || cy != 0 || cz != 0) return {ProjPoint(u[0], u[1], u[2]), ProjPoint(v[0], v[1], v[2])};
  }
}

ProjPoint on_line(const ProjPoint& u, const ProjPoint& v, long t) {
  return normalize_point({Scalar(u[0] + t * v[0]), Scalar(u[1] + t * v[1]), Scalar(u[2] + t * v[2])});
}

std::vector<long> distinct_values(std::size_t count, long lo, long hi, bool allow_zero, Sampler& rng) {
  std::set<long> seen;
  std::vector<long> out;
  while (out.size() < count) {
    rng.spend_attempt();
    const long t = rng.uniform(lo, hi);
    if ((!allow_zero && t == 0) || !seen.insert(t).second) continue;
    out.push_back(t);
  }
  return out;
}

std::vector<Scalar> random_coefficients(std::size_t r, Sampler& rng) {
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < r; ++i) out.emplace_back(rng.nonzero(-kCoeffRange, kCoeffRange));
  return out;
}

}  // namespace

Position Position::parse(std::string_view text) {
  auto count_of = [&](std::string_view rest) -> std::size_t {
    if (!rest.empty() && rest.front() == ':') {
      rest.remove_prefix(1);
    } else if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') {
      rest = rest.substr(1, rest.size() - 2);
    } else {
      throw Error(ErrorKind::InvalidRequest, "position '" + std::string(text) + "' needs a count, e.g. collinear(5)");
    }
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc() || ptr != rest.data() + rest.size()) {
      throw Error(ErrorKind::InvalidRequest, "bad count in position '" + std::string(text) + "'");
    }
    return value;
  };
  if (text == "general") return general();
  if (text == "cubic") return cubic();
  if (text.starts_with("collinear")) return collinear(count_of(text.substr(9)));
  if (text.starts_with("conic")) return conic(count_of(text.substr(5)));
  throw Error(ErrorKind::InvalidRequest, "unknown position '" + std::string(text) + "'");
}

std::string Position::to_string() const {
  switch (kind) {
    case Kind::General: return "general";
    case Kind::Collinear: return "collinear(" + std::to_string(special) + ")";
    case Kind::Conic: return "conic(" + std::to_string(special) + ")";
    case Kind::Cubic: return "cubic";
  }
  return "general";
}

Instance gen_instance(unsigned n, std::size_t r, const Position& position, std::uint64_t seed,
                      const GenOptions& options) {
  if (r == 0) throw Error(ErrorKind::InvalidRequest, "r must be positive");
  if (!options.allow_out_of_range && r > 11 + 3 * static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::InvalidRequest, "r = " + std::to_string(r) + " exceeds 11 + 3n");
  }
  if (position.special > r) {
    throw Error(ErrorKind::InvalidRequest, std::to_string(position.special) + " special points requested out of r = " +
                                               std::to_string(r));
  }

  Sampler rng(seed);
  Instance inst;
  inst.degree = 8 + 2 * n;

  switch (position.kind) {
    case Position::Kind::General: {
      GeneralPositionGuard guard;
      fill_general(guard, r, rng);
      inst.points = guard.points();
      break;
    }
    case Position::Kind::Collinear: {
      const auto [u, v] = random_independent_pair(rng);
      GeneralPositionGuard guard;
      for (long t : distinct_values(position.special, -kCoordRange, kCoordRange, true, rng)) {
        guard.add(on_line(u, v, t));
      }
      fill_general(guard, r, rng);
      inst.points = guard.points();
      break;
    }
    case Position::Kind::Conic: {
      GeneralPositionGuard guard;
      while (guard.points().size() < position.special) {
        rng.spend_attempt();
        const long p = rng.uniform(-12, 12);
        const long q = rng.uniform(1, 6);
        const ProjPoint pt(q * q - p * p, 2 * p * q, q * q + p * p);
        if (!guard.contains(pt)) guard.add(pt);
      }
      fill_general(guard, r, rng);
      inst.points = guard.points();
      break;
    }
    case Position::Kind::Cubic: {
      for (long t : distinct_values(r, -kCoordRange, kCoordRange, false, rng)) {
        inst.points.emplace_back(t * t, t * t * t, 1);
      }
      break;
    }
  }
  inst.coefficients = random_coefficients(r, rng);
  return inst;
}

DoubleDecomposition gen_double_decomposition_fixture(unsigned d, std::size_t r, std::uint64_t seed) {
  if (r == 0 || 2 * r <= d + 1 || d + 1 < r) {
    throw Error(ErrorKind::InvalidRequest, "need 2r > d + 1 >= r, got d = " + std::to_string(d) + ", r = " +
                                               std::to_string(r));
  }
  Sampler rng(seed);
  for (;;) {
    rng.spend_attempt();
    const auto [u, v] = random_independent_pair(rng);
    const auto params = distinct_values(2 * r, -30, 30, true, rng);
    std::vector<ProjPoint> pts;
    for (long t : params) pts.push_back(on_line(u, v, t));

    // Columns are v_d(P_i); a kernel vector is a linear relation among them.
    Matrix columns(basis_size(d), 2 * r);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Form f = power_form(pts[i], d);
      for (std::size_t k = 0; k < f.size(); ++k) columns(k, i) = f[k];
    }
    const auto kernel = kernel_basis(columns);
    if (kernel.empty()) continue;
    std::vector<Integer> relation(2 * r, 0);
    for (const auto& b : kernel) {
      const long w = kernel.size() == 1 ? 1 : rng.nonzero(-kCoeffRange, kCoeffRange);
      for (std::size_t i = 0; i < relation.size(); ++i) relation[i] += w * b[i];
    }
    bool all_nonzero = true;
    for (const auto& c : relation) all_nonzero = all_nonzero && c != 0;
    if (!all_nonzero) continue;

    DoubleDecomposition out;
    out.a.degree = out.b.degree = d;
    for (std::size_t i = 0; i < r; ++i) {
      out.a.points.push_back(pts[i]);
      out.a.coefficients.emplace_back(relation[i]);
      out.b.points.push_back(pts[r + i]);
      out.b.coefficients.emplace_back(-relation[r + i]);
    }
    out.tensor = compose_tensor(out.a);
    return out;
  }
}

}  // namespace waring
