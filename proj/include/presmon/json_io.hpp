#pragma once

#include "presmon/alphabet.hpp"
#include "presmon/grid_function.hpp"
#include "presmon/monoid.hpp"
#include "presmon/space.hpp"
#include "presmon/verifier.hpp"

#include <string_view>

#include "json.hpp"

namespace presmon {

// Wire forms (all numbers are exact integers; rationals appear as scaled
// values relative to the alphabet's scale):
//   alphabet      {"scale": s, "values": [v, ...]}
//   function      {"alphabet": A, "table": [image value, ...]}
//   space         {"alphabet": A, "points": ["p0", ...], "matrix": [[v, ...], ...]}
//   family        {"alphabet": A, "spaces": [matrix, ...]}
//   function set  {"alphabet": A, "functions": [table, ...]}
// Loaders accept non-canonical scale/value pairs and normalize them; the
// emitters always produce the canonical form, so emitted documents reload
// to equal values.

nlohmann::json to_json(const DistanceAlphabet& a);
DistanceAlphabet alphabet_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GridFunction& f);
GridFunction function_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DistanceMatrix& m);
DistanceMatrix space_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SpaceFamily& x);
SpaceFamily family_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FunctionSet& s);
FunctionSet function_set_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerificationReport& r);

/// Parses a JSON document, mapping parse failures onto Error.
nlohmann::json parse_json_text(std::string_view text, std::string_view origin);

/// Reads and parses a JSON file.
nlohmann::json load_json_file(const std::string& path);

} // namespace presmon
