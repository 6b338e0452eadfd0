#include "oracles.hpp"
#include "test_util.hpp"

#include "waring/generators.hpp"
#include "waring/linalg.hpp"
#include "waring/terracini.hpp"

#include <omp.h>

#include <random>

using namespace waring;

TEST(TerraciniMatrix, Examples) {
  const Matrix m = terracini_matrix(testutil::instance(2, testutil::points({{1, 0, 0}})));
  EXPECT_EQ(m, Matrix::from_rows({testutil::scalars({1, 0, 0, 0, 0, 0}), testutil::scalars({0, 1, 0, 0, 0, 0}),
                                  testutil::scalars({0, 0, 1, 0, 0, 0})}));
  const auto two = testutil::instance(2, testutil::points({{1, 0, 0}, {1, 1, 0}}));
  EXPECT_EQ(terracini_matrix(two).rows(), 6u);
  EXPECT_EQ(terracini_dimension(two).q, 5u);
  EXPECT_EQ(oracle::rank_minors(terracini_matrix(two)), 5u);
}

TEST(TerraciniMatrix, RowContent) {
  const Instance inst = gen_instance(0, 6, Position::general(), 9);
  const Matrix m = terracini_matrix(inst);
  ASSERT_EQ(m.rows(), 18u);
  ASSERT_EQ(m.cols(), 45u);
  for (std::size_t i = 0; i < inst.length(); ++i) {
    const Form lower = power_form(inst.points[i], 7);
    for (unsigned j = 0; j < 3; ++j) {
      const Form expected = multiply_by_variable(lower, j);
      const auto row = m.row(3 * i + j);
      EXPECT_TRUE(std::equal(row.begin(), row.end(), expected.coeffs().begin(), expected.coeffs().end()));
    }
  }
}

TEST(TerraciniDimension, Examples) {
  auto rep = terracini_dimension(testutil::instance(8, testutil::points({{1, 0, 0}})));
  EXPECT_EQ(rep.q, 3u);
  EXPECT_EQ(rep.projective_dimension, 2);
  EXPECT_TRUE(rep.full);

  rep = terracini_dimension(gen_instance(0, 11, Position::general(), 1));
  EXPECT_EQ(rep.q, 33u);
  EXPECT_EQ(rep.expected, 32u);
  EXPECT_TRUE(rep.full);

  rep = terracini_dimension(gen_instance(0, 8, Position::collinear(5), 1));
  EXPECT_LT(rep.q, 24u);
  EXPECT_FALSE(rep.full);

  EXPECT_ERROR_KIND(terracini_dimension(testutil::instance(1, testutil::points({{1, 0, 0}}))),
                    ErrorKind::InvalidInstance);
}

TEST(TerraciniDimension, ScaleInvariance) {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<long> s(1, 9);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Instance inst = gen_instance(0, 7 + seed % 4, seed % 2 ? Position::general() : Position::collinear(5), seed);
    std::vector<Coords> raw;
    for (const auto& p : inst.points) {
      const Scalar lambda = testutil::ratio(s(rng) * (rng() % 2 ? 1 : -1), s(rng));
      Coords c = p.as_scalars();
      for (auto& x : c) x *= lambda;
      raw.push_back(c);
    }
    EXPECT_EQ(rank(terracini_matrix(raw, inst.degree)).rank, terracini_dimension(inst).q);
  }
}

TEST(TerraciniDimension, ContainsPowersAndIsBounded) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const Instance inst = gen_instance(seed % 2, 5 + seed, seed % 3 ? Position::general() : Position::collinear(6), seed);
    const Matrix m = terracini_matrix(inst);
    const std::size_t q = terracini_dimension(inst).q;
    EXPECT_LE(q, std::min(3 * inst.length(), basis_size(inst.degree)));
    Matrix powers(0, basis_size(inst.degree));
    for (const auto& p : inst.points) {
      const Form f = power_form(p, inst.degree);
      EXPECT_TRUE(is_in_span(f.coeffs(), m));
      powers.append_row(f.coeffs());
    }
    EXPECT_GE(q, rank(powers).rank);
  }
}

TEST(TerraciniDimension, SerialAndParallelAgree) {
  const int saved = omp_get_max_threads();
  omp_set_num_threads(4);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const Instance inst = gen_instance(1, 12, Position::general(), seed);
    const auto a = terracini_dimension(inst);
    const auto b = terracini_dimension_serial(inst);
    EXPECT_EQ(a.q, b.q);
    EXPECT_EQ(a.ops, b.ops);
  }
  omp_set_num_threads(saved);
}

TEST(TerraciniTest, Verdicts) {
  EXPECT_TRUE(terracini_test(gen_instance(0, 11, Position::general(), 2)));
  EXPECT_TRUE(terracini_test(gen_instance(0, 4, Position::general(), 2)));
  EXPECT_FALSE(terracini_test(gen_instance(0, 9, Position::collinear(5), 2)));
  EXPECT_FALSE(terracini_test(gen_instance(0, 10, Position::conic(9), 2)));
  EXPECT_FALSE(terracini_test(gen_instance(1, 14, Position::collinear(6), 2)));
}

TEST(TerraciniTest, RejectsInvalidInstances) {
  auto inst = gen_instance(0, 6, Position::general(), 3);
  inst.coefficients[2] = 0;
  EXPECT_ERROR_KIND(terracini_test(inst), ErrorKind::InvalidInstance);
  EXPECT_ERROR_KIND(terracini_test(testutil::instance(9, testutil::points({{1, 0, 0}}))), ErrorKind::InvalidInstance);

  std::vector<ProjPoint> line;
  for (long t = 0; t < 10; ++t) line.emplace_back(1, t, 0);
  EXPECT_ERROR_KIND(terracini_test(testutil::instance(8, line)), ErrorKind::InvalidInstance);
}
