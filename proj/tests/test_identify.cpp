#include "test_util.hpp"

#include "waring/generators.hpp"
#include "waring/identify.hpp"
#include "waring/io.hpp"

using namespace waring;

namespace {

std::vector<ProjPoint> on_line(long count) {
  std::vector<ProjPoint> pts;
  for (long t = 0; t < count; ++t) pts.emplace_back(1, t, 0);
  return pts;
}

bool mentions(const Verdict& v, std::string_view text) {
  for (const auto& note : v.notes)
    if (note.find(text) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST(Validate, AcceptsAndReturnsN) {
  EXPECT_EQ(validate_instance(gen_instance(0, 5, Position::general(), 1)), 0u);
  EXPECT_EQ(validate_instance(gen_instance(2, 17, Position::general(), 1)), 2u);
}

TEST(Validate, Rejections) {
  EXPECT_ERROR_KIND(validate_instance(testutil::instance(7, on_line(2))), ErrorKind::UnsupportedDegree);
  EXPECT_ERROR_KIND(validate_instance(testutil::instance(6, on_line(2))), ErrorKind::UnsupportedDegree);
  EXPECT_ERROR_KIND(validate_instance(testutil::instance(8, {})), ErrorKind::InvalidInstance);

  GenOptions wide;
  wide.allow_out_of_range = true;
  EXPECT_ERROR_KIND(validate_instance(gen_instance(1, 15, Position::general(), 2, wide)), ErrorKind::LengthOutOfRange);
  EXPECT_NO_THROW(validate_instance(gen_instance(1, 14, Position::general(), 2)));

  Instance inst = gen_instance(0, 6, Position::general(), 3);
  inst.coefficients[4] = 0;
  EXPECT_ERROR_KIND(validate_instance(inst), ErrorKind::ZeroCoefficient);

  inst = gen_instance(0, 6, Position::general(), 3);
  inst.coefficients.pop_back();
  EXPECT_ERROR_KIND(validate_instance(inst), ErrorKind::InvalidInstance);

  inst = gen_instance(0, 6, Position::general(), 3);
  inst.points[5] = inst.points[0];
  EXPECT_ERROR_KIND(validate_instance(inst), ErrorKind::DuplicatePoint);
}

TEST(NonRedundant, Examples) {
  auto nr = non_redundant(testutil::instance(8, testutil::points({{1, 0, 0}, {0, 1, 0}})));
  EXPECT_TRUE(nr.non_redundant);
  EXPECT_EQ(nr.rank, 2u);
  nr = non_redundant(testutil::instance(8, on_line(10)));
  EXPECT_FALSE(nr.non_redundant);
  EXPECT_EQ(nr.rank, 9u);
  EXPECT_TRUE(non_redundant(testutil::instance(8, on_line(9))).non_redundant);
}

TEST(Identify, RankDeficient) {
  const Verdict v = identify(testutil::instance(8, on_line(10)));
  EXPECT_EQ(v.kind, VerdictKind::RankDeficient);
  EXPECT_EQ(v.rank_of_md, 9u);
  EXPECT_FALSE(v.terracini);
  EXPECT_FALSE(v.identifiable());
}

TEST(Identify, SmallRankBoundary) {
  for (unsigned n = 0; n <= 2; ++n) {
    for (std::size_t r = 1; r <= 7 + n; ++r) {
      const Verdict v = identify(gen_instance(n, r, Position::general(), 10 * n + r));
      SCOPED_TRACE(testing::Message() << "n=" << n << " r=" << r);
      if (r <= 4 + n) {
        EXPECT_EQ(v.kind, VerdictKind::IdentifiableSmallRank);
        EXPECT_FALSE(v.terracini);
      } else {
        EXPECT_EQ(v.kind, VerdictKind::IdentifiableTerracini);
        ASSERT_TRUE(v.terracini);
        EXPECT_EQ(v.terracini->q, 3 * r);
      }
    }
  }
}

TEST(Identify, SmallRankEvenWhenCollinear) {
  std::vector<ProjPoint> pts = on_line(4);
  const Verdict v = identify(testutil::instance(8, pts));
  EXPECT_EQ(v.kind, VerdictKind::IdentifiableSmallRank);
}

TEST(Identify, TerraciniCertifies) {
  const Verdict v = identify(gen_instance(0, 11, Position::general(), 1));
  EXPECT_EQ(v.kind, VerdictKind::IdentifiableTerracini);
  EXPECT_EQ(v.terracini->q, 33u);
  EXPECT_EQ(v.rank_of_md, 11u);
  EXPECT_GT(v.total_ops.multiplications, v.s0_ops.multiplications);
  EXPECT_TRUE(v.identifiable());
  EXPECT_FALSE(v.position);
}

TEST(Identify, InconclusiveWithDiagnostics) {
  IdentifyOptions opts;
  opts.diagnostics = true;
  Verdict v = identify(gen_instance(0, 8, Position::collinear(5), 1), opts);
  EXPECT_EQ(v.kind, VerdictKind::Inconclusive);
  ASSERT_TRUE(v.obstruction);
  EXPECT_EQ(v.obstruction->kind, FamilyKind::CollinearFamily);
  EXPECT_TRUE(mentions(v, "undecided"));
  EXPECT_TRUE(mentions(v, "CollinearFamily"));
  EXPECT_FALSE(v.identifiable());

  v = identify(gen_instance(0, 11, Position::conic(9), 1), opts);
  EXPECT_EQ(v.kind, VerdictKind::Inconclusive);
  EXPECT_EQ(v.obstruction->kind, FamilyKind::ConicFamily);

  v = identify(gen_instance(0, 8, Position::collinear(5), 1));
  EXPECT_EQ(v.kind, VerdictKind::Inconclusive);
  EXPECT_FALSE(v.obstruction);
}

TEST(Identify, NeverCertifiesFamilies) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    EXPECT_FALSE(identify(gen_instance(0, 5 + seed % 7, Position::collinear(5), seed)).identifiable());
    EXPECT_FALSE(identify(gen_instance(1, 11 + seed % 4, Position::conic(11), seed)).identifiable());
  }
}

TEST(Identify, SerialOptionGivesSameVerdict) {
  const Instance inst = gen_instance(1, 13, Position::general(), 4);
  IdentifyOptions serial;
  serial.serial = true;
  const Verdict a = identify(inst);
  const Verdict b = identify(inst, serial);
  EXPECT_EQ(a.kind, b.kind);
  EXPECT_EQ(a.total_ops, b.total_ops);
}

TEST(Identify, Deterministic) {
  IdentifyOptions opts;
  opts.diagnostics = true;
  const Instance inst = gen_instance(0, 10, Position::conic(9), 12);
  EXPECT_EQ(to_json(identify(inst, opts)).dump(), to_json(identify(inst, opts)).dump());
  EXPECT_EQ(to_string(VerdictKind::IdentifiableTerracini), "IdentifiableTerracini");
}
