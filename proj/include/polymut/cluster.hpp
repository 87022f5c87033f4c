#ifndef POLYMUT_CLUSTER_HPP
#define POLYMUT_CLUSTER_HPP

#include "polymut/intlinalg.hpp"
#include "polymut/mutation.hpp"
#include "polymut/polytope.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace polymut {

// Exchange data of a seed. Indices 0..cols-1 label the full variable set;
// `unfrozen` lists the mutable ones in increasing order, and `eps` holds one
// row per unfrozen index (in that order) over all columns. The unfrozen
// square block must be skew-symmetrizable: d_i eps_{i,j} = -d_j eps_{j,i}
// for some positive integers d_i.
struct Seed {
    IntMat eps;
    std::vector<size_t> unfrozen;

    size_t vars() const { return eps.empty() ? 0 : eps[0].size(); }
    bool is_unfrozen(size_t k) const;
    // Row of eps belonging to unfrozen index k; throws if k is frozen.
    size_t row_of(size_t k) const;

    friend bool operator==(const Seed&, const Seed&) = default;
};

// Validates shape and skew-symmetrizability.
Seed make_seed(IntMat eps, std::vector<size_t> unfrozen);

// Matrix mutation in direction k: entries in row/column k flip sign, the
// rest pick up sgn(e_{ik}) [e_{ik} e_{kj}]_+. An involution.
Seed mutate_matrix(const Seed& s, size_t k);

// Whether a lies below b in the dominance order: a = b + u * eps for some
// nonnegative integer vector u over the unfrozen rows.
bool dominance_leq(const Seed& s, const IntVec& a, const IntVec& b);

// Tropicalized exchange in direction k:
//   g_j -> g_j + [-e_{kj}]_+ g_k + e_{kj} [g_k]_+   (j != k),
//   g_k -> -g_k.
RatVec tropical_mutate_point(const Seed& s, size_t k, const RatVec& g);

// The tropical exchange written as a piecewise translation followed by a
// unimodular map acting on the right: g -> phi_point(piecewise, g) * linear.
struct TropicalStep {
    MutationDatum piecewise;
    IntMat linear;
};

// Splits direction k into (w, F) with w the primitive part of row k and
// F = conv(0, -c e_k), plus the postcomposed unimodular map. Requires row k
// nonzero.
TropicalStep decompose_tropical(const Seed& s, size_t k);

// A seed together with a polytope carried along the exchange graph and the
// list of directions taken from the root.
struct SeedGraphNode {
    Seed seed;
    RationalPolytope payload;
    std::vector<size_t> path;
};

// Mutates seed and payload together. Throws if the piecewise image of the
// payload fails to be convex, which cannot happen for payloads genuinely
// attached to the seed.
SeedGraphNode tropical_mutate_polytope(const SeedGraphNode& node, size_t k);

// One distinct node discovered by explore, with its payload diagnostics.
// Dual data is present only when the payload has a unique interior lattice
// point to dualize at.
struct ExploreEntry {
    SeedGraphNode node;
    size_t multiplicity = 1;
    std::vector<IntVec> interior_points;
    std::optional<bool> dual_is_lattice;
    std::vector<Int> dual_ehrhart;
};

struct ExploreResult {
    std::vector<ExploreEntry> entries;
    // Tree nodes visited, counting duplicates.
    size_t visited = 0;
};

// Breadth-first walk of the exchange tree to the given depth, never undoing
// the immediately preceding direction. Ties broken by ascending k. Nodes
// with equal (eps, payload) are merged with multiplicity.
ExploreResult explore(const SeedGraphNode& root, size_t depth);

}  // namespace polymut

#endif
