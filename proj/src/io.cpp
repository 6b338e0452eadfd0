#include "waring/io.hpp"

#include "waring/error.hpp"

#include <algorithm>

namespace waring {

namespace {

[[noreturn]] void parse_fail(ErrorKind kind, const std::string& where, const std::string& what) {
  throw Error(kind, where + ": " + what);
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

Integer json_integer(const Json& value, const std::string& where) {
  if (value.is_number_unsigned()) return Integer(std::to_string(value.get<std::uint64_t>()));
  if (value.is_number_integer()) return Integer(std::to_string(value.get<std::int64_t>()));
  parse_fail(ErrorKind::ParseError, where, "expected an integer, got " + value.dump());
}

Scalar json_scalar(const Json& value, const std::string& where) {
  if (value.is_number_integer()) return Scalar(json_integer(value, where));
  if (value.is_string()) {
    try {
      return parse_scalar(value.get<std::string>());
    } catch (const Error& e) {
      parse_fail(ErrorKind::ParseError, where, e.what());
    }
  }
  parse_fail(ErrorKind::ParseError, where, "expected an integer or a \"p/q\" string, got " + value.dump());
}

Json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  throw Error(ErrorKind::InvalidRequest, "coordinate " + x.get_str() + " does not fit a JSON integer");
}

}  // namespace

Instance parse_instance(std::string_view text, const ParseOptions& options) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, "syntax error at " + line_column(text, e.byte) + ": " + e.what());
  }
  if (!root.is_object()) parse_fail(ErrorKind::ParseError, "document", "expected a JSON object");
  for (const auto& [key, value] : root.items()) {
    if (key != "degree" && key != "points" && key != "coefficients") {
      parse_fail(ErrorKind::ParseError, key, "unexpected field");
    }
  }
  for (const char* key : {"degree", "points", "coefficients"}) {
    if (!root.contains(key)) parse_fail(ErrorKind::ParseError, key, "missing field");
  }

  Instance inst;
  const Integer degree = json_integer(root["degree"], "degree");
  if (degree < 0 || degree > 10000) parse_fail(ErrorKind::ParseError, "degree", "out of range");
  inst.degree = static_cast<unsigned>(degree.get_ui());

  const Json& points = root["points"];
  if (!points.is_array()) parse_fail(ErrorKind::ParseError, "points", "expected an array");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string where = "points[" + std::to_string(i) + "]";
    const Json& p = points[i];
    if (!p.is_array() || p.size() != 3) parse_fail(ErrorKind::ParseError, where, "expected three integers");
    Coords c;
    for (std::size_t k = 0; k < 3; ++k) c[k] = Scalar(json_integer(p[k], where + "[" + std::to_string(k) + "]"));
    try {
      inst.points.push_back(normalize_point(c));
    } catch (const Error&) {
      parse_fail(ErrorKind::InvalidPoint, where, "all coordinates are zero");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (inst.points[j] == inst.points[i]) {
        parse_fail(ErrorKind::DuplicatePoint, where, "same projective point as points[" + std::to_string(j) + "]");
      }
    }
  }

  const Json& coeffs = root["coefficients"];
  if (!coeffs.is_array()) parse_fail(ErrorKind::ParseError, "coefficients", "expected an array");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const std::string where = "coefficients[" + std::to_string(i) + "]";
    inst.coefficients.push_back(json_scalar(coeffs[i], where));
    if (options.strict && inst.coefficients.back() == 0) parse_fail(ErrorKind::ZeroCoefficient, where, "is zero");
  }
  if (inst.coefficients.size() != inst.points.size()) {
    parse_fail(ErrorKind::InvalidInstance, "coefficients",
               std::to_string(coeffs.size()) + " entries for " + std::to_string(points.size()) + " points");
  }
  return inst;
}

Json scalar_to_json(const Scalar& s) {
  if (s.get_den() == 1 && s.get_num().fits_slong_p()) return Json(s.get_num().get_si());
  return Json(to_string(s));
}

std::string serialize_instance(const Instance& inst) {
  Json doc;
  doc["degree"] = inst.degree;
  Json points = Json::array();
  for (const auto& p : inst.points) {
    points.push_back(Json::array({integer_to_json(p[0]), integer_to_json(p[1]), integer_to_json(p[2])}));
  }
  doc["points"] = std::move(points);
  Json coeffs = Json::array();
  for (const auto& c : inst.coefficients) coeffs.push_back(scalar_to_json(c));
  doc["coefficients"] = std::move(coeffs);
  return doc.dump();
}

Json form_to_json(const Form& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(scalar_to_json(c));
  return Json{{"degree", f.degree()}, {"coefficients", std::move(coeffs)}};
}

Json to_json(const OpCounter& ops) {
  return Json{{"multiplications", ops.multiplications}, {"elimination_steps", ops.elimination_steps}};
}

Json to_json(const HilbertProfile& profile) {
  return Json{{"h", profile.h},
              {"dh", profile.dh},
              {"stabilization", profile.stabilization},
              {"complete", profile.complete}};
}

Json to_json(const KruskalReport& report) {
  Json out{{"degree", report.degree},
           {"k", report.k},
           {"bound", report.bound},
           {"subsets_tested", report.subsets_tested}};
  out["witness"] = report.witness ? Json(*report.witness) : Json(nullptr);
  out["ops"] = to_json(report.ops);
  return out;
}

Json to_json(const TerraciniReport& report) {
  return Json{{"r", report.r},
              {"d", report.d},
              {"q", report.q},
              {"projective_dimension", report.projective_dimension},
              {"expected", report.expected},
              {"full", report.full},
              {"ops", to_json(report.ops)}};
}

namespace {

Json incidence_to_json(const CurveIncidence& c) {
  Json out{{"count", c.count}};
  out["witness"] = c.witness ? form_to_json(*c.witness) : Json(nullptr);
  out["members"] = c.members;
  return out;
}

}  // namespace

Json to_json(const PositionReport& report) {
  Json cubic{{"contained", report.cubic.contained}};
  cubic["witness"] = report.cubic.witness ? form_to_json(*report.cubic.witness) : Json(nullptr);
  return Json{{"max_collinear", incidence_to_json(report.collinear)},
              {"max_on_conic", incidence_to_json(report.conic)},
              {"in_cubic", std::move(cubic)}};
}

Json to_json(const FamilyObstruction& obstruction) {
  return Json{{"kind", std::string(to_string(obstruction.kind))},
              {"threshold", obstruction.threshold},
              {"witness", obstruction.witness}};
}

Json to_json(const Verdict& verdict) {
  Json out{{"kind", std::string(to_string(verdict.kind))},
           {"identifiable", verdict.identifiable()},
           {"degree", verdict.degree},
           {"n", verdict.n},
           {"r", verdict.r},
           {"rank_of_md", verdict.rank_of_md}};
  out["terracini"] = verdict.terracini ? to_json(*verdict.terracini) : Json(nullptr);
  if (verdict.position) out["position"] = to_json(*verdict.position);
  if (verdict.obstruction) out["obstruction"] = to_json(*verdict.obstruction);
  out["ops"] = Json{{"s0", to_json(verdict.s0_ops)}, {"total", to_json(verdict.total_ops)}};
  out["notes"] = verdict.notes;
  return out;
}

}  // namespace waring
