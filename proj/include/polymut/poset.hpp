#ifndef POLYMUT_POSET_HPP
#define POLYMUT_POSET_HPP

#include "polymut/mutation.hpp"
#include "polymut/polytope.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polymut {

// Raised when a poset or marking fails the hypotheses an operation needs
// (impure poset, markers disagreeing on a rank, inadmissible u, ...).
struct AssumptionViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A finite poset given by its Hasse diagram, with a marked subset that
// contains every minimal and every maximal element and carries an integer
// marking that never decreases upward. Coordinates of the associated
// polytopes are the unmarked elements in creation order.
class MarkedPoset {
  public:
    static MarkedPoset create(std::vector<std::string> elements,
                              std::vector<std::pair<std::string, std::string>> covers,
                              std::map<std::string, Int> marking);

    const std::vector<std::string>& elements() const { return elements_; }
    // Cover pairs (lower, upper) as element indices.
    const std::vector<std::pair<size_t, size_t>>& covers() const { return covers_; }
    // Unmarked element indices in creation order; these are the coordinates.
    const std::vector<size_t>& unmarked() const { return unmarked_; }

    bool is_marked(size_t e) const;
    const Int& marker(size_t e) const;
    size_t index_of(const std::string& label) const;
    // Coordinate slot of an unmarked element index.
    size_t coord_of(size_t e) const;
    const std::vector<size_t>& lower_covers(size_t e) const { return lower_[e]; }
    const std::vector<size_t>& upper_covers(size_t e) const { return upper_[e]; }

    friend bool operator==(const MarkedPoset&, const MarkedPoset&) = default;

  private:
    MarkedPoset() = default;

    std::vector<std::string> elements_;
    std::vector<std::pair<size_t, size_t>> covers_;
    std::map<size_t, Int> marking_;
    std::vector<size_t> unmarked_;
    std::vector<size_t> coord_;  // element index -> coordinate slot (or npos)
    std::vector<std::vector<size_t>> lower_, upper_;
};

// {x : value(p) <= value(q) on covers}, marked values fixed to the marking.
RationalPolytope order_polytope(const MarkedPoset& mp);

// {x >= 0 : sum over each saturated marker-to-marker chain <= marker gap}.
RationalPolytope chain_polytope(const MarkedPoset& mp);

// Interpolation between the two: elements of pi_prime contribute
// chain-style, the rest order-style. pi_prime = {} gives the order
// polytope, pi_prime = all unmarked the chain polytope.
RationalPolytope chain_order_polytope(const MarkedPoset& mp,
                                      const std::vector<std::string>& pi_prime);

// Partial transfer map: coordinates in pi_prime are replaced by the minimal
// difference to a lower cover, the rest stay. The full map (pi_prime = all
// unmarked) carries the order polytope onto the chain polytope.
RatVec transfer(const MarkedPoset& mp, const std::vector<std::string>& pi_prime,
                const RatVec& x);

// Length of the longest chain ending at each element. Defined only for pure
// posets (all maximal chains of equal length); throws AssumptionViolated
// otherwise.
std::vector<size_t> rank(const MarkedPoset& mp);
bool is_pure(const MarkedPoset& mp);

// A lattice point of the order polytope that is constant on every rank and
// matches the marking on marked ranks. Greedy: an unmarked rank takes the
// previous value plus one, capped by the next marked rank's value. Throws
// AssumptionViolated when no such point exists.
IntVec admissible_u(const MarkedPoset& mp);

// The transfer map written as a translation followed by one combinatorial
// mutation per unmarked element, top to bottom. Applying trace to the order
// polytope yields expected[i] after step i; the last one is the chain
// polytope translated by -shift.
struct TransferFactorization {
    std::vector<std::string> order;
    MutationTrace trace;
    std::vector<RationalPolytope> expected;
    RatVec shift;
};

TransferFactorization transfer_factorization(const MarkedPoset& mp, const IntVec& u);

// The three-element poset whose transfer map is piecewise affine with no
// common fixed point, certifying that transfer maps need not be compositions
// of combinatorial mutations. lambda = (l1, l2, l3, l4), l1 <= l2 < l3 <= l4.
struct CounterexampleWitness {
    MarkedPoset poset;
    std::vector<IntMat> branch_linear;
    std::vector<RatVec> branch_constant;
    bool branches_match_transfer;
    bool no_common_fixed_point;
};

CounterexampleWitness counterexample_witness(const IntVec& lambda);

}  // namespace polymut

#endif
