#pragma once

#include <json.hpp>

#include <optional>

#include "polymut/cluster.hpp"
#include "polymut/mutation.hpp"
#include "polymut/polytope.hpp"
#include "polymut/poset.hpp"

namespace polymut {

using json = nlohmann::ordered_json;

// Numbers serialize exactly: integers as JSON numbers while they fit in 64
// bits (strings beyond that), rationals as "p/q" ("p" when the denominator
// is 1). Parsers accept both forms. All emitters produce canonically ordered
// output, so equal values give byte-equal text.

json int_to_json(const Int& x);
Int int_from_json(const json& j);
json rat_to_json(const Rat& x);
Rat rat_from_json(const json& j);

json to_json(const IntVec& v);
json to_json(const RatVec& v);
json to_json(const IntMat& m);
IntVec intvec_from_json(const json& j);
RatVec ratvec_from_json(const json& j);
IntMat intmat_from_json(const json& j);

// { "dim": ambient, "vertices": [["p/q",...]], "halfspaces": [{"normal":
// [int,...], "rhs": "p/q"}] }. Parsing rebuilds from the vertices and, when
// halfspaces are present, cross-checks them against the recomputed ones.
json to_json(const RationalPolytope& p);
RationalPolytope polytope_from_json(const json& j);

// { "w": [int,...], "F": <polytope>, "f": [[int,...]] | null }: a mutation
// datum plus the optional linear factor of a tropical map decomposition.
json datum_to_json(const MutationDatum& d, const std::optional<IntMat>& f = std::nullopt);
struct ParsedDatum {
    MutationDatum datum;
    std::optional<IntMat> f;
};
ParsedDatum datum_from_json(const json& j);

// Trace steps: { "side": "M"|"N", "translate": ["p/q",...]?, "datum": ...? }.
json to_json(const MutationTrace& t);
MutationTrace trace_from_json(const json& j);

// { "J": [1..m], "J_uf": [...], "epsilon": [[int,...]] }, 1-based labels.
json to_json(const Seed& s);
Seed seed_from_json(const json& j);

// { "elements": [labels], "covers": [[lo,hi],...], "marked": {label: int} }.
json to_json(const MarkedPoset& mp);
MarkedPoset poset_from_json(const json& j);

}  // namespace polymut
