#pragma once

// JSON documents for schemes and reports. Vectors are [x, y] arrays; doubles
// are written in shortest round-trip form (at most 17 significant digits).

#include <json.hpp>

#include "mchroma/scheme.hpp"
#include "mchroma/search.hpp"
#include "mchroma/red_blue.hpp"
#include "mchroma/verify.hpp"

namespace mchroma {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemeFormat = "mchroma.scheme/1";
inline constexpr const char* kReportFormat = "mchroma.report/1";

Json to_json(Vec2 v);
Vec2 vec2_from_json(const Json& j);

Json to_json(const HexagonChoice& c);
HexagonChoice choice_from_json(const Json& j);

Json to_json(const ColoringScheme& s);
/// Rebuilds a scheme from the `n` and `choice` fields; derived fields in the
/// document are ignored. Throws SchemeError on malformed input.
ColoringScheme scheme_from_json(const Json& j);

Json to_json(const SeparationResult& r);
Json to_json(const PackingReport& r);
Json to_json(const LineRegression& r);
Json to_json(const SamplingReport& r);
Json to_json(const FeasibilityReport& r);
Json to_json(const CertifiedDefault& r);
Json to_json(const Configuration& k);
Json to_json(const TranslateHitReport& r);

}  // namespace mchroma
