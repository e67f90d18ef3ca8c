#pragma once

#include <json.hpp>

#include "enriques/chamber.hpp"
#include "enriques/invariants.hpp"
#include "enriques/k3_cover.hpp"
#include "enriques/taubes_sw.hpp"

// JSON literal formats. Every number is written as an exact rational string.
namespace enriques::io {

using json = nlohmann::ordered_json;

/// { "basis": "L"|"E"|"K3", "coeffs": ["p/q", ...], "torsion": 0|1 }
json to_json(const LatticeVector& v);
LatticeVector vector_from_json(const json& j);

/// { "b": ["p/q" x 10] }
json to_json(const ChamberPoint& p);
ChamberPoint point_from_json(const json& j);

/// { "word": [{ "root": vector }, ...], "sign_flip": bool, "scale": "p/q" }
json to_json(const ReductionTrace& t);
ReductionTrace trace_from_json(const json& j);

/// { "x": [...], "y": [...], "z1": [...], "z2": [...], "z3": [...] }
json k3_to_json(const LatticeVector& v);
LatticeVector k3_from_json(const json& j);

/// { "p": K3 literal, "q": K3 literal }
PeriodCandidate period_candidate_from_json(const json& j);

/// { "B": vector@E, "l": integer }; "l" omitted for a class on S.
json to_json(const BlowupClass& c);
BlowupClass blowup_class_from_json(const json& j);

json to_json(const InvariantReport& r);
json to_json(const WitnessReport& r);

json rational_array(std::span<const Rational> values);
std::vector<Rational> rationals_from_json(const json& j);

/// Parses text as JSON; malformed text throws Error(invalid_input).
json parse(std::string_view text);

}  // namespace enriques::io
