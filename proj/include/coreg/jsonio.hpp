// JSON forms of the library's values.  Output uses ordered JSON so identical
// inputs serialize byte-for-byte identically; parsers accept the same shapes
// plus small shorthands ("p/q" strings or bare integers for numbers).

#pragma once

#include <json.hpp>

#include "coreg/classify.hpp"
#include "coreg/presets.hpp"

namespace coreg {

using Json = nlohmann::ordered_json;

// Rationals travel as decimal-free strings: "p" or "p/q".
Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);

// {"conductor": n, "coeffs": ["p/q", ...]}; parsing also accepts a bare
// rational (string or integer) as a conductor-1 value.
Json cyclotomic_json(const Cyclotomic& x);
Cyclotomic cyclotomic_from_json(const Json& j);

Json matrix_json(const CMat& m);  // rows of entries
CMat matrix_from_json(const Json& j);

// {"dim": 2|3, "projective": bool, "generators": [matrix, ...]}; the result
// is the closure of the generators under the given cap.
MatGroup group_from_json(const Json& j, std::uint32_t cap = kOrderCap);

// Pair generators for a product of lines: [{"g1": m, "g2": m, "swap": bool},
// ...], or an object {"pairs": [...]} with the same list.
std::vector<QuadricElement> pairs_from_json(const Json& j);

// {"components": [{"id", "coeff", "label"?}, ...],
//  "crossings": [{"at", "pair": [i, j]}, ...]} with component indices.
CurveConfiguration config_from_json(const Json& j);
Json config_json(const CurveConfiguration& c);

// [{"components": {from: to, ...}, "crossings": {from: to, ...}}, ...]
std::vector<ActionGenerator> actions_from_json(const Json& j);
Json actions_json(const std::vector<ActionGenerator>& gens);

Json lattice_json(const SurfaceLattice& lat);
SurfaceLattice lattice_from_json(const Json& j);

Json topology_json(const TopologyType& t);
TopologyType topology_from_json(const Json& j);

// Full classification report; report_from_json(report_json(r)) == r.
Json report_json(const ClassificationReport& r);
ClassificationReport report_from_json(const Json& j);

}  // namespace coreg
