#pragma once

#include <cstddef>
#include <vector>

#include "polymut/cluster.hpp"
#include "polymut/polytope.hpp"
#include "polymut/poset.hpp"
#include "polymut/rational.hpp"

namespace polymut {

enum class CartanType { A, C, D, E6, E7, E8 };

// c[i][j] = <alpha_j, h_i>, 0-based node labels.
struct CartanDatum {
    CartanType type;
    size_t rank = 0;
    IntMat c;
};

// Valid ranks: A n>=1, C n>=2, D n>=3, E6/E7/E8 fixed. Throws otherwise.
// For the E types n is ignored.
CartanDatum cartan(CartanType type, size_t n = 0);

// Weights live in fundamental-weight coordinates: lam[i] = <lam, h_i>.
// s_i lam = lam - lam_i alpha_i, where (alpha_i)_j = c[j][i].
IntVec simple_reflect(const CartanDatum& cd, size_t i, const IntVec& lam);

// The built-in longest-element word for each type, letters 0-based.
std::vector<size_t> standard_word(CartanType type, size_t n = 0);

// kplus[k] = least position j > k with the same letter, or word.size().
std::vector<size_t> word_kplus(const std::vector<size_t>& word);

// Positions whose letter never repeats later (kplus = word length).
std::vector<size_t> frozen_indices(const std::vector<size_t>& word);

// Exchange matrix of a word: one row per non-frozen position s over all
// positions t, with entries
//   1 if s+ = t, -1 if s = t+,
//   c_{i_t,i_s} if s < t < s+ < t+, -c_{i_t,i_s} if t < s < t+ < s+,
//   0 otherwise.
Seed exchange_from_word(const CartanDatum& cd, const std::vector<size_t>& word);

// Unit lower-triangular: d[s][t] = <s_{i_{t+1}} ... s_{i_s} pi_{i_s}, h_{i_t}>
// for t <= s (pi = fundamental weight).
IntMat m_matrix(const CartanDatum& cd, const std::vector<size_t>& word);

// a[j] = sum of d[k][j] over frozen positions k >= j.
IntVec string_interior_point(const CartanDatum& cd, const std::vector<size_t>& word);

// Triangular interlacing array for sl_{n+1} in row-major coordinates
// (a(1,1),...,a(1,n), a(2,1),...), bounded above by the partial sums
// lam_{>=k} = sum_{k<=l<=n} lam_l.
RationalPolytope gt_polytope_A(size_t n, const IntVec& lam);

// Symplectic interlacing array for sp_{2n} in the anti-diagonal coordinate
// order (a(1,1), b(2,1), a(1,2), a(2,1), b(3,1), b(2,2), ...), bounded by
// lam_{<=k} = sum_{l<=k} lam_l and trailing zeros.
RationalPolytope gt_polytope_C(size_t n, const IntVec& lam);

// Marked poset whose order polytope is the GT polytope of the same type,
// with unmarked elements created in the coordinate order above.
MarkedPoset gt_marked_poset(CartanType type, size_t n, const IntVec& lam);

// Chain polytopes of the GT marked posets.
RationalPolytope fflv_A(size_t n, const IntVec& lam);
RationalPolytope fflv_C(size_t n, const IntVec& lam);

// Newton-Okounkov body of the full flag variety of SL4 for the word
// (1,2,1,3,2,1), in coordinates (g_1,...,g_6).
RationalPolytope sl4_no_body(const IntVec& lam);

// Nakashima-Zelevinsky polytope for Sp4 over R^4_{>=0}.
RationalPolytope nz_sp4(const IntVec& lam);

}  // namespace polymut
