#pragma once

#include <string>

#include "json.hpp"
#include "unionbounds/errors.hpp"
#include "unionbounds/prob_system.hpp"

namespace unionbounds {

// Reads and parses a JSON file; // and /* */ comments are permitted.
// Throws ParseError on missing files or malformed JSON.
nlohmann::json load_json_file(const std::string& path);

// System format, event indices 1-based, unknown fields rejected:
//   { "n_events": 3, "outcomes": [ { "p": 0.145, "events": [3] }, ... ] }
FiniteProbabilitySystem system_from_json(const nlohmann::json& j);
nlohmann::ordered_json system_to_json(const FiniteProbabilitySystem& sys);

// Summary format: { "alpha": [...], "gamma": [...] }
MomentSummary summary_from_json(const nlohmann::json& j);
nlohmann::ordered_json summary_to_json(const MomentSummary& s);

// Decomposition format: { "n_events": N, "a": [[a_1(1),...,a_1(N)], ...] }
DegreeDecomposition decomposition_from_json(const nlohmann::json& j);
nlohmann::ordered_json decomposition_to_json(const DegreeDecomposition& a);

}  // namespace unionbounds
