#ifndef POLYMUT_POLYTOPE_HPP
#define POLYMUT_POLYTOPE_HPP

#include "polymut/intlinalg.hpp"

#include <optional>
#include <variant>

namespace polymut {

// normal . x <= rhs, with a primitive integer normal. An equation shows up
// as the pair (a, c), (-a, -c).
struct Halfspace {
    IntVec normal;
    Rat rhs;

    friend bool operator==(const Halfspace&, const Halfspace&) = default;
    friend bool operator<(const Halfspace& l, const Halfspace& r) {
        if (l.normal != r.normal) return l.normal < r.normal;
        return l.rhs < r.rhs;
    }
};

struct EmptyPolytopeError : std::runtime_error {
    EmptyPolytopeError() : std::runtime_error("halfspace system is infeasible") {}
};
struct UnboundedPolytopeError : std::runtime_error {
    UnboundedPolytopeError() : std::runtime_error("halfspace system is unbounded") {}
};

/**
 * A bounded rational polytope, carrying both canonical descriptions:
 * vertices sorted lexicographically, and an irredundant halfspace list
 * sorted lexicographically. Lower-dimensional polytopes keep equations in
 * the halfspace list as opposite pairs. Every constructor funnels through
 * exact convex-hull computation, so equal point sets give bit-equal objects.
 */
class RationalPolytope {
  public:
    static RationalPolytope from_vertices(size_t ambient, std::vector<RatVec> points);
    // Throws EmptyPolytopeError / UnboundedPolytopeError.
    static RationalPolytope from_halfspaces(size_t ambient, std::vector<Halfspace> hs);

    size_t ambient_dim() const { return ambient_; }
    size_t dim() const { return dim_; }
    const std::vector<RatVec>& vertices() const { return verts_; }
    const std::vector<Halfspace>& halfspaces() const { return hs_; }

    bool is_lattice() const;
    bool contains(const RatVec& x) const;
    // strict satisfaction of every halfspace; always false below full dim
    bool contains_interior(const RatVec& x) const;

    friend bool operator==(const RationalPolytope&, const RationalPolytope&) = default;

  private:
    RationalPolytope() = default;
    size_t ambient_ = 0;
    size_t dim_ = 0;
    std::vector<RatVec> verts_;
    std::vector<Halfspace> hs_;
};

// Dual with the pairing normalized to <u, v> >= -1: facets of P at lattice
// distance 1 from the origin become vertices of the dual and vice versa.
// Requires the origin strictly inside P (full-dimensional).
RationalPolytope polar(const RationalPolytope& p);

// polar(P - a)
RationalPolytope dual_at(const RationalPolytope& p, const RatVec& a);

std::vector<IntVec> lattice_points(const RationalPolytope& p);
std::vector<IntVec> interior_lattice_points(const RationalPolytope& p);

// |kP ∩ Z^m| for k = 1..k_max.
std::vector<Int> ehrhart_counts(const RationalPolytope& p, int k_max);

// Euclidean volume in the ambient dimension (0 whenever dim < ambient).
Rat volume(const RationalPolytope& p);

// Volume measured inside the affine hull, normalized so the induced lattice
// has covolume 1. Equals volume() for full-dimensional polytopes, and is the
// right yardstick for unimodular invariance below full dimension.
Rat lattice_volume(const RationalPolytope& p);

RationalPolytope minkowski_sum(const RationalPolytope& p, const RationalPolytope& q);

// P ∩ {<w,x> = h}; nullopt when the slice is empty.
std::optional<RationalPolytope> slice(const RationalPolytope& p, const IntVec& w, const Rat& h);

RationalPolytope translate(const RationalPolytope& p, const RatVec& t);

// x |-> x*m + t with m unimodular (throws std::invalid_argument otherwise).
RationalPolytope apply_affine(const RationalPolytope& p, const IntMat& m, const IntVec& t);

// Search result for affine-unimodular equivalence. `certificate` maps the
// first polytope onto the second: P*m + t = Q, verified vertex set against
// vertex set before returning. `inconclusive` means the frame budget ran out
// before the search space was exhausted; it is deliberately distinct from a
// definitive "no".
struct EquivalenceResult {
    std::optional<std::pair<IntMat, IntVec>> certificate;
    bool inconclusive = false;
    bool equivalent() const { return certificate.has_value(); }
};

EquivalenceResult affine_unimodular_equivalent(const RationalPolytope& p,
                                               const RationalPolytope& q,
                                               size_t frame_budget = 500000);

// --- internal helpers shared by other modules -------------------------------

// Facet-tightness pattern of each vertex, one bitset row per vertex (bit j set
// iff halfspace j is tight). Used for adjacency and triangulation.
std::vector<std::vector<bool>> vertex_facet_incidence(const RationalPolytope& p);

// Vertex adjacency in the edge graph (common tight normals of rank dim-1).
std::vector<std::vector<size_t>> vertex_adjacency(const RationalPolytope& p);

// Projection of a point set to exact coordinates on its affine hull, using a
// saturated lattice basis of the direction space: lattice points map to
// lattice points and the projection is unimodular on the induced lattice.
struct HullProjection {
    RatVec anchor;   // subtracted before projecting
    IntMat basis;    // q x m, rows span (direction space ∩ Z^m)
    size_t dim;      // q
    RatVec project(const RatVec& x) const;
    RatVec lift(const RatVec& c) const;
};
HullProjection hull_projection(const std::vector<RatVec>& points);

}  // namespace polymut

#endif
