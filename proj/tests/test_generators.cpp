#include "test_util.hpp"

#include "waring/generators.hpp"
#include "waring/linalg.hpp"
#include "waring/position.hpp"

using namespace waring;

namespace {

void check_common(const Instance& inst, unsigned n, std::size_t r) {
  EXPECT_EQ(inst.degree, 8 + 2 * n);
  EXPECT_EQ(inst.length(), r);
  EXPECT_EQ(inst.coefficients.size(), r);
  EXPECT_NO_THROW(PointSet{inst.points});
  for (const auto& c : inst.coefficients) {
    EXPECT_NE(c, 0);
    EXPECT_EQ(c.get_den(), 1);
    EXPECT_LE(abs(c), 9);
  }
}

}  // namespace

TEST(Position, Parse) {
  EXPECT_EQ(Position::parse("general").kind, Position::Kind::General);
  EXPECT_EQ(Position::parse("cubic").kind, Position::Kind::Cubic);
  auto p = Position::parse("collinear(5)");
  EXPECT_EQ(p.kind, Position::Kind::Collinear);
  EXPECT_EQ(p.special, 5u);
  p = Position::parse("conic:9");
  EXPECT_EQ(p.kind, Position::Kind::Conic);
  EXPECT_EQ(p.special, 9u);
  EXPECT_EQ(p.to_string(), "conic(9)");
  EXPECT_ERROR_KIND(Position::parse("collinear"), ErrorKind::InvalidRequest);
  EXPECT_ERROR_KIND(Position::parse("conic(x)"), ErrorKind::InvalidRequest);
  EXPECT_ERROR_KIND(Position::parse("quartic"), ErrorKind::InvalidRequest);
}

TEST(GenInstance, General) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const unsigned n = seed % 3 == 0 ? 1 : 0;
    const std::size_t r = 1 + seed % (11 + 3 * n);
    const Instance inst = gen_instance(n, r, Position::general(), seed);
    SCOPED_TRACE(seed);
    check_common(inst, n, r);
    const PointSet z(inst.points);
    EXPECT_LE(max_collinear(z).count, 2u);
    EXPECT_LE(max_on_conic(z).count, 5u);
    EXPECT_EQ(family_obstruction(z, n).kind, FamilyKind::None);
  }
}

TEST(GenInstance, Collinear) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const std::size_t s = 5 + seed % 3;
    const std::size_t r = s + seed % (12 - s);
    const Instance inst = gen_instance(0, r, Position::collinear(s), seed);
    SCOPED_TRACE(seed);
    check_common(inst, 0, r);
    const auto line = max_collinear(PointSet(inst.points));
    EXPECT_EQ(line.count, s);
  }
}

TEST(GenInstance, Conic) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const std::size_t s = 9 + seed % 2;
    const std::size_t r = s + seed % (12 - s);
    const Instance inst = gen_instance(0, r, Position::conic(s), seed);
    SCOPED_TRACE(seed);
    check_common(inst, 0, r);
    std::size_t on = 0;
    for (const auto& p : inst.points) on += (p[0] * p[0] + p[1] * p[1] == p[2] * p[2]) ? 1 : 0;
    EXPECT_EQ(on, s);
    EXPECT_LE(max_collinear(PointSet(inst.points)).count, 2u);
  }
}

TEST(GenInstance, Cubic) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const std::size_t r = 9 + seed % 3;
    const Instance inst = gen_instance(seed % 2 ? 0 : 1, r, Position::cubic(), seed);
    SCOPED_TRACE(seed);
    check_common(inst, seed % 2 ? 0 : 1, r);
    for (const auto& p : inst.points) EXPECT_EQ(p[0] * p[0] * p[0], p[1] * p[1] * p[2]);
    EXPECT_TRUE(contained_in_cubic(PointSet(inst.points)).contained);
  }
}

TEST(GenInstance, DeterministicAndSeedSensitive) {
  EXPECT_EQ(gen_instance(0, 9, Position::general(), 42), gen_instance(0, 9, Position::general(), 42));
  EXPECT_NE(gen_instance(0, 9, Position::general(), 42), gen_instance(0, 9, Position::general(), 43));
}

TEST(GenInstance, Rejections) {
  EXPECT_ERROR_KIND(gen_instance(0, 12, Position::general(), 1), ErrorKind::InvalidRequest);
  EXPECT_ERROR_KIND(gen_instance(0, 0, Position::general(), 1), ErrorKind::InvalidRequest);
  EXPECT_ERROR_KIND(gen_instance(0, 4, Position::collinear(5), 1), ErrorKind::InvalidRequest);
  GenOptions wide;
  wide.allow_out_of_range = true;
  EXPECT_EQ(gen_instance(0, 12, Position::cubic(), 1, wide).length(), 12u);
}

TEST(DoubleDecomposition, Fixture) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto fx = gen_double_decomposition_fixture(8, 5, seed);
    SCOPED_TRACE(seed);
    EXPECT_EQ(fx.a.length(), 5u);
    EXPECT_EQ(fx.b.length(), 5u);
    EXPECT_EQ(compose_tensor(fx.a), fx.tensor);
    EXPECT_EQ(compose_tensor(fx.b), fx.tensor);
    EXPECT_FALSE(fx.tensor.is_zero());
    for (const auto& p : fx.a.points)
      EXPECT_EQ(std::find(fx.b.points.begin(), fx.b.points.end(), p), fx.b.points.end());
    for (const auto& c : fx.a.coefficients) EXPECT_NE(c, 0);
    for (const auto& c : fx.b.coefficients) EXPECT_NE(c, 0);
  }
  EXPECT_EQ(gen_double_decomposition_fixture(8, 5, 3).tensor, gen_double_decomposition_fixture(8, 5, 3).tensor);
  EXPECT_ERROR_KIND(gen_double_decomposition_fixture(8, 4, 1), ErrorKind::InvalidRequest);
  EXPECT_ERROR_KIND(gen_double_decomposition_fixture(8, 10, 1), ErrorKind::InvalidRequest);
}
