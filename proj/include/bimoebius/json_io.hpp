#pragma once

#include <vector>

#include "json.hpp"

#include "bimoebius/fixed_points.hpp"
#include "bimoebius/literal.hpp"

// JSON shapes spoken by the CLI: transform specs in, transforms and
// fixed-point sets out.  Coefficients and points travel as literal strings.

namespace bimo {

using Json = nlohmann::ordered_json;

// {"a","b","c","d"} of literal strings with an optional "eps" override of
// the determinant tolerance.  Coefficients must be finite.
MobiusTransform transform_from_json(const Json& spec, double default_eps = kSingularEps);

// {"a","b","c","d","det"} as idempotent-style literals.
Json transform_to_json(const MobiusTransform& s);

// Deterministic CLI ordering: lexicographic by (p1.re, p1.im, p2.re, p2.im)
// with infinite components last.
std::vector<FixedPoint> sorted_fixed_points(const FixedPointSet& set);

// {"count": n | "infinite", "points": [...], "is_identity": ...,
//  "component_solutions": [...]}, points sorted as above.
Json fixed_point_set_to_json(const FixedPointSet& set);

}  // namespace bimo
