#ifndef POLYMUT_INTLINALG_HPP
#define POLYMUT_INTLINALG_HPP

#include "polymut/rational.hpp"

#include <optional>
#include <utility>

namespace polymut {

// Matrices are row-major vectors of rows. Linear maps act on row vectors from
// the right: y = x * M, so M has one row per input coordinate.
using IntMat = std::vector<IntVec>;
using RatMat = std::vector<RatVec>;

inline size_t mat_rows(const IntMat& m) { return m.size(); }
inline size_t mat_cols(const IntMat& m) { return m.empty() ? 0 : m[0].size(); }

IntMat identity_mat(size_t n);
IntMat transpose(const IntMat& m);
IntVec mul_vec_mat(const IntVec& x, const IntMat& m);
RatVec mul_vec_mat(const RatVec& x, const IntMat& m);
IntMat mul_mat(const IntMat& a, const IntMat& b);

// gcd of all entries, always >= 0; 0 only for the zero vector.
Int content(const IntVec& v);

// v = g * p with p primitive and g = content(v) > 0. Errors on the zero
// vector, which has no primitive direction.
std::pair<IntVec, Int> primitive_part(const IntVec& v);

// Row-style Hermite normal form: U * m = H with U unimodular. Pivots are
// positive, entries above a pivot lie in [0, pivot), zero rows sink to the
// bottom. rank = number of nonzero rows of H.
struct HnfResult {
    IntMat H;
    IntMat U;
    size_t rank = 0;
};
HnfResult hnf(const IntMat& m);

// Exact determinant (fraction-free Bareiss). Square input only.
Int det(const IntMat& m);

// True iff m is square with |det| = 1; throws on non-square input.
bool is_unimodular(const IntMat& m);

// Basis of {x : x * m = 0} over the integers (a saturated lattice, so the
// rows also generate the rational kernel). Rows of the returned matrix.
IntMat left_kernel(const IntMat& m);
inline IntMat right_kernel(const IntMat& m) { return left_kernel(transpose(m)); }

// Exact Gauss elimination helpers over the rationals.
size_t rat_rank(RatMat m);
std::optional<RatVec> solve_left(const RatMat& m, const RatVec& b);  // x*m = b
std::optional<RatMat> rat_inverse(const RatMat& m);
Rat rat_det(RatMat m);

RatMat to_rat(const IntMat& m);
// Clears denominators row by row; each row keeps its direction.
IntMat scale_rows_to_int(const RatMat& m);

// Given a saturated full-row-rank basis B (q x m), returns a unimodular
// m x m matrix whose first q rows are B.
IntMat complete_basis(const IntMat& b);

}  // namespace polymut

#endif
