#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "gml/duality.hpp"
#include "gml/group.hpp"
#include "gml/mass.hpp"
#include "gml/stringy.hpp"

namespace gml::json {

/// Insertion-ordered, so output key order is fixed by the writers.
using Json = nlohmann::ordered_json;

/// Parse text; ParseError on malformed JSON.
Json parse(std::string_view text);
/// Compact single-line dump with a trailing newline.
std::string dump(const Json& j);

// Every reader throws ParseError on a shape mismatch; domain checks raise the
// usual kinds (MalformedStrata, InvalidParams, ...).

Json to_json(const LaurentPoly& p);  // [[coeff, exp], ...] ascending
LaurentPoly laurent_from_json(const Json& j);

Json to_json(const ClassFunction& f);
ClassFunction class_function_from_json(const Json& j);

/// A ClassFunction, or the string "infinite".
Json to_json(const Extended& x);
Extended extended_from_json(const Json& j);

Json to_json(const MassPair& m);
MassPair mass_pair_from_json(const Json& j);

Json to_json(const RepresentationSpec& spec);
RepresentationSpec representation_from_json(const Json& j);

Json to_json(const RamificationProfile& p);
RamificationProfile profile_from_json(const Json& j);

Json to_json(const ResolutionData& r);
ResolutionData resolution_from_json(const Json& j);

Json to_json(const DualityReport& r);
DualityReport report_from_json(const Json& j);

}  // namespace gml::json
