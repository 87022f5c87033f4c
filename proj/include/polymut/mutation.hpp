#ifndef POLYMUT_MUTATION_HPP
#define POLYMUT_MUTATION_HPP

#include "polymut/polytope.hpp"

namespace polymut {

/**
 * The data of a combinatorial mutation: a primitive direction w and a lattice
 * polytope factor F lying in the hyperplane w-perp. Constructed through
 * make_datum, which enforces those preconditions exactly.
 */
struct MutationDatum {
    IntVec w;
    RationalPolytope factor;
};

// Throws std::invalid_argument unless w is primitive and nonzero, F is a
// lattice polytope of matching dimension, and <w, v> = 0 for every vertex v.
MutationDatum make_datum(IntVec w, RationalPolytope factor);

// Piecewise-linear map on the dual side: u - min_{v in V(F)} <u,v> * w.
RatVec phi_point(const MutationDatum& d, const RatVec& u);

// The inverse map; equals phi_point for the datum (-w, F).
RatVec phi_inverse(const MutationDatum& d, const RatVec& u);

// Image of a polytope under phi when that image fails to be convex: the
// convex hull of the piece images strictly exceeds the measure they carry.
struct NonConvexImage {
    RationalPolytope hull;
    Rat hull_volume;
    Rat piece_volume_sum;
};

// Applies phi piecewise: the domain splits into cells on which one vertex of
// F attains the minimum, each cell moves by a unimodular shear. Returns the
// image polytope when the union of sheared cells is convex.
std::variant<RationalPolytope, NonConvexImage> phi_polytope(const MutationDatum& d,
                                                            const RationalPolytope& q);

// Lattice hull of the height-h erosion: the points of the level-h slice that
// stay inside P after fattening by |h| copies of F, shrunk to their lattice
// hull. nullopt when the erosion holds no lattice point.
std::optional<RationalPolytope> g_slice(const MutationDatum& d, const RationalPolytope& p,
                                        const Int& h);

// Mutation failure witness: a vertex on a negative level that the fattened
// lattice slice fails to reach back.
struct NotWellDefined {
    RatVec vertex;
    Int level;
};

// Combinatorial mutation on the vertex side: negative levels are replaced by
// their eroded lattice slices, nonnegative levels are fattened by h copies of
// F, and the convex hull of it all is taken. Requires a lattice polytope.
std::variant<RationalPolytope, NotWellDefined> mutate(const MutationDatum& d,
                                                      const RationalPolytope& p);

// Checks phi(dual of P) == dual of mutate(P) for P with the origin interior.
// Throws std::invalid_argument when the mutation is not well defined or the
// piecewise image fails to be convex.
bool duality_holds(const MutationDatum& d, const RationalPolytope& p);

// A composite of translations and piecewise-linear mutation maps, applied to
// a polytope left to right.
struct TraceStep {
    std::optional<RatVec> translate;          // applied first when present
    std::optional<MutationDatum> map;         // then the mutation map
};

struct MutationTrace {
    std::vector<TraceStep> steps;
};

struct TraceFailure {
    size_t step;
    NonConvexImage defect;
};

std::variant<RationalPolytope, TraceFailure> apply_trace(const MutationTrace& t,
                                                         const RationalPolytope& start);

}  // namespace polymut

#endif
