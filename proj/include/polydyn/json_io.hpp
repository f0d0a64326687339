#pragma once

// JSON forms of the shared schemas.  A polygon is
//   { "n": int, "vertices": [[re, im] | "inf", ...],
//     "monodromy": [[m00, m01], [m10, m11]] }        (optional, identity default)
// where matrix entries are numbers or [re, im] pairs.

#include <json.hpp>

#include "polydyn/harness.hpp"

namespace polydyn {

nlohmann::json to_json(cplx z);
cplx cplx_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ProjPoint& p);
ProjPoint projpoint_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Mobius& m);
Mobius mobius_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TwistedPolygon& P);
TwistedPolygon polygon_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MobiusClass& c);
nlohmann::json to_json(const CollapsePrediction& p);
nlohmann::json to_json(const CollapseReport& r);
nlohmann::json to_json(const ScanSummary& s);
nlohmann::json to_json(const SpecialReport& s);
nlohmann::json to_json(const RelationsReport& r);

} // namespace polydyn
