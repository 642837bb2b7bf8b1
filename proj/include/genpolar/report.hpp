#pragma once

// Machine-readable report envelopes.  Serialization is deterministic:
// object keys are sorted, rationals render canonically as "p/q".

#include <json.hpp>

#include <string>
#include <vector>

#include "genpolar/classifier.hpp"
#include "genpolar/newton.hpp"
#include "genpolar/oracle.hpp"

namespace genpolar {

using json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kSchemaVersion = "1";

json envelope(const std::string& command, json inputs, json result,
              std::vector<std::string> warnings = {});

// Shape check every emitted envelope must pass; throws std::logic_error.
void validate_envelope(const json& env);

json to_json(const LatticePoint& p);
json to_json(const NewtonPolygon& np);
json to_json(const CompactEdge& e);
json to_json(const NumericalSemigroup& s);
json to_json(const EquisingularityType& t);
json to_json(const ClassificationReport& rep);
json to_json(const PolarSample& s);
json to_json(const PuiseuxBranchApprox& b);

}  // namespace genpolar
