#pragma once

#include "waring/hilbert.hpp"
#include "waring/identify.hpp"
#include "waring/instance.hpp"
#include "waring/kruskal.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace waring {

using Json = nlohmann::ordered_json;

struct ParseOptions {
  /// Reject zero coefficients at parse time.
  bool strict = false;
};

/// Parses {"degree": d, "points": [[a,b,c], ...], "coefficients": [...]}.
/// Coordinates are integers; coefficients are integers or "p/q" strings.
/// Floating-point literals are rejected. Errors name the offending field,
/// syntax errors carry line and column.
Instance parse_instance(std::string_view text, const ParseOptions& options = {});

std::string serialize_instance(const Instance& inst);

Json scalar_to_json(const Scalar& s);
Json form_to_json(const Form& f);
Json to_json(const OpCounter& ops);
Json to_json(const HilbertProfile& profile);
Json to_json(const KruskalReport& report);
Json to_json(const TerraciniReport& report);
Json to_json(const PositionReport& report);
Json to_json(const FamilyObstruction& obstruction);
Json to_json(const Verdict& verdict);

}  // namespace waring
