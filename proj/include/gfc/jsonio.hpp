#pragma once

#include <string>

#include <json.hpp>

#include "gfc/moduli.hpp"

namespace gfc {

using OrderedJson = nlohmann::ordered_json;

// File schemas (all complex values use the complex literal grammar):
//   configuration: {"points": ["inf", "0", "1", "-6", ...]}
//   curve:         {"k": 2, "lambdas": ["-6", "-2+1.4142135623730951i", ...]}
//   automorphism:  {"perm": [2,1,4,3,6,5], "c": ["1", ...], "anticonformal": true}
// Permutations are 1-based image lists, matching the cone-point labels.

ConeConfiguration config_from_json(const OrderedJson& j, double eps = kDefaultEpsilon);
OrderedJson config_to_json(const ConeConfiguration& cfg);

FermatCurve curve_from_json(const OrderedJson& j, double eps = kDefaultEpsilon);
OrderedJson curve_to_json(const FermatCurve& curve);

CurveAutomorphism automorphism_from_json(const OrderedJson& j);
OrderedJson automorphism_to_json(const CurveAutomorphism& a);

OrderedJson classification_to_json(const ModuliClassification& c, double epsilon);

OrderedJson symmetry_to_json(const ConfigSymmetry& s);

/// Parse a JSON document from text; throws ParseError on malformed input.
OrderedJson parse_json_text(const std::string& text);

/// Read a whole file; throws ParseError when it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace gfc
