#pragma once

#include <json.hpp>

#include "lgp/descendants.hpp"
#include "lgp/period_series.hpp"
#include "lgp/string_topology.hpp"

namespace lgp {

// Wire formats. All exact numbers travel as strings ("p/q" for rationals);
// exponents and indices are plain JSON integers.

nlohmann::json to_json(const PeriodSeries& s);          // {"maxDegree": D, "coeffs": ["1", ...]}
PeriodSeries series_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LoopClass& x);             // [{"subset": [...], "exponent": [...], "coeff": "c"}]
LoopClass loop_class_from_json(const nlohmann::json& j, int fallback_n = 0);

nlohmann::json to_json(const DescendantSymbol& s);      // {"n": n, "vectors": [[...], ...]}
DescendantSymbol symbol_from_json(const nlohmann::json& j);

// Certificate nodes: {"kind": ..., "weight": "p/q", "data": {...}, "children": [...]}.
nlohmann::json to_json(const DerivationCertificate& cert);
DerivationCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

ExponentVector vector_from_json(const nlohmann::json& j);

}  // namespace lgp
