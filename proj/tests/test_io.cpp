#include "test_util.hpp"

#include "waring/generators.hpp"
#include "waring/io.hpp"

using namespace waring;

namespace {

std::string message_of(std::string_view text, const ParseOptions& opts = {}) {
  try {
    parse_instance(text, opts);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(ParseInstance, Basic) {
  const Instance inst =
      parse_instance(R"({"degree": 8, "points": [[1,0,0],[0,2,4]], "coefficients": [3, "-1/2"]})");
  EXPECT_EQ(inst.degree, 8u);
  EXPECT_EQ(inst.points, testutil::points({{1, 0, 0}, {0, 1, 2}}));
  EXPECT_EQ(inst.coefficients, (std::vector<Scalar>{Scalar(3), Scalar(-1, 2)}));
}

TEST(ParseInstance, Errors) {
  EXPECT_ERROR_KIND(parse_instance(R"({"degree": 8, "points": [[1,0,0],[0,0,0]], "coefficients": [1,1]})"),
                    ErrorKind::InvalidPoint);
  EXPECT_NE(message_of(R"({"degree": 8, "points": [[1,0,0],[0,0,0]], "coefficients": [1,1]})").find("points[1]"),
            std::string::npos);
  EXPECT_ERROR_KIND(parse_instance(R"({"degree": 8, "points": [[1,0,0],[2,0,0]], "coefficients": [1,1]})"),
                    ErrorKind::DuplicatePoint);
  EXPECT_ERROR_KIND(parse_instance(R"({"degree": 8, "points": [[1.5,0,0]], "coefficients": [1]})"),
                    ErrorKind::ParseError);
  EXPECT_ERROR_KIND(parse_instance(R"({"degree": 8, "points": [[1,0,0]], "coefficients": [0.5]})"),
                    ErrorKind::ParseError);
  EXPECT_ERROR_KIND(parse_instance(R"({"degree": 8, "points": [[1,0]], "coefficients": [1]})"), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(parse_instance(R"({"degree": 8, "points": [[1,0,0]]})"), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(parse_instance(R"({"degree": 8, "points": [], "coefficients": [], "extra": 1})"),
                    ErrorKind::ParseError);
  EXPECT_ERROR_KIND(parse_instance(R"({"degree": 8, "points": [[1,0,0]], "coefficients": [1, 2]})"),
                    ErrorKind::InvalidInstance);
  EXPECT_ERROR_KIND(parse_instance(R"({"degree": 8, "points": [[1,0,0]], "coefficients": ["1/0"]})"),
                    ErrorKind::ParseError);
  EXPECT_ERROR_KIND(parse_instance("[1, 2]"), ErrorKind::ParseError);
}

TEST(ParseInstance, SyntaxErrorLocation) {
  const std::string msg = message_of("{\n  \"degree\": 8,\n  \"points\": [[1,0,0]\n}");
  EXPECT_NE(msg.find("line 4"), std::string::npos) << msg;
}

TEST(ParseInstance, StrictZeroCoefficients) {
  const std::string text = R"({"degree": 8, "points": [[1,0,0],[0,1,0]], "coefficients": [1, 0]})";
  EXPECT_NO_THROW(parse_instance(text));
  ParseOptions strict;
  strict.strict = true;
  EXPECT_ERROR_KIND(parse_instance(text, strict), ErrorKind::ZeroCoefficient);
  EXPECT_NE(message_of(text, strict).find("coefficients[1]"), std::string::npos);
}

TEST(SerializeInstance, RoundTrip) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Position pos = seed % 4 == 0   ? Position::cubic()
                         : seed % 4 == 1 ? Position::general()
                         : seed % 4 == 2 ? Position::collinear(5)
                                         : Position::conic(9);
    Instance inst = gen_instance(static_cast<unsigned>(seed % 2), 10, pos, seed);
    inst.coefficients[0] = Scalar(-7, 3);
    EXPECT_EQ(parse_instance(serialize_instance(inst)), inst);
  }
}

TEST(Json, Scalars) {
  EXPECT_EQ(scalar_to_json(Scalar(5)), Json(5));
  EXPECT_EQ(scalar_to_json(Scalar(-1, 3)), Json("-1/3"));
  EXPECT_EQ(form_to_json(power_form(ProjPoint(1, 1, 0), 1)).dump(), R"({"degree":1,"coefficients":[1,1,0]})");
}

TEST(Json, VerdictDocument) {
  IdentifyOptions opts;
  opts.diagnostics = true;
  const Json doc = to_json(identify(gen_instance(0, 8, Position::collinear(5), 1), opts));
  EXPECT_EQ(doc["kind"], "Inconclusive");
  EXPECT_EQ(doc["r"], 8);
  EXPECT_TRUE(doc.contains("terracini"));
  EXPECT_TRUE(doc.contains("obstruction"));
  EXPECT_TRUE(doc.contains("notes"));
}
