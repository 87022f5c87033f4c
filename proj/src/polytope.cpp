#include "polymut/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace polymut {

namespace {

using boost::multiprecision::abs;

// ---------------------------------------------------------------------------
// Double description for cones {y : c.y <= 0}. State is a lineality basis
// plus extreme rays of the pointed part; constraints are inserted one at a
// time. Everything stays integral: rays are kept primitive.
// ---------------------------------------------------------------------------

struct ConeRep {
    std::vector<IntVec> lin;
    std::vector<IntVec> rays;
};

IntVec make_primitive(IntVec v) {
    Int g = content(v);
    if (g > 1)
        for (Int& x : v) x /= g;
    return v;
}

ConeRep double_description(const std::vector<IntVec>& constraints, size_t D) {
    ConeRep s;
    for (size_t i = 0; i < D; ++i) {
        IntVec e(D, 0);
        e[i] = 1;
        s.lin.push_back(e);
    }
    std::vector<IntVec> done;  // constraints already enforced
    // tight sets over `done`, one row of flags per ray
    std::vector<std::vector<bool>> tight;

    auto recompute_tight = [&] {
        tight.assign(s.rays.size(), std::vector<bool>(done.size(), false));
        for (size_t r = 0; r < s.rays.size(); ++r)
            for (size_t c = 0; c < done.size(); ++c)
                tight[r][c] = dot(done[c], s.rays[r]) == 0;
    };

    for (const IntVec& a : constraints) {
        size_t l0 = s.lin.size();
        for (size_t i = 0; i < s.lin.size(); ++i)
            if (dot(a, s.lin[i]) != 0) { l0 = i; break; }

        if (l0 != s.lin.size()) {
            // split one lineality direction into a ray pointing inside
            IntVec v = s.lin[l0];
            Int av = dot(a, v);
            IntVec r0 = v;
            if (av > 0)
                for (Int& x : r0) x = -x;
            Int ar0 = -abs(av);  // a.r0 < 0
            std::vector<IntVec> nl;
            for (size_t i = 0; i < s.lin.size(); ++i) {
                if (i == l0) continue;
                Int al = dot(a, s.lin[i]);
                IntVec w(D);
                for (size_t j = 0; j < D; ++j) w[j] = ar0 * s.lin[i][j] - al * r0[j];
                nl.push_back(make_primitive(std::move(w)));
            }
            s.lin = std::move(nl);
            std::vector<IntVec> nr;
            for (const IntVec& r : s.rays) {
                Int ar = dot(a, r);
                IntVec w(D);
                // positive multiple of r - (a.r / a.r0) r0
                for (size_t j = 0; j < D; ++j) w[j] = -ar0 * r[j] + ar * r0[j];
                nr.push_back(make_primitive(std::move(w)));
            }
            nr.push_back(make_primitive(std::move(r0)));
            s.rays = std::move(nr);
        } else {
            std::vector<Int> val(s.rays.size());
            bool any_pos = false;
            for (size_t i = 0; i < s.rays.size(); ++i) {
                val[i] = dot(a, s.rays[i]);
                if (val[i] > 0) any_pos = true;
            }
            if (any_pos) {
                std::vector<IntVec> keep;
                std::vector<size_t> pos, neg;
                for (size_t i = 0; i < s.rays.size(); ++i) {
                    if (val[i] > 0) pos.push_back(i);
                    else {
                        if (val[i] < 0) neg.push_back(i);
                        keep.push_back(s.rays[i]);
                    }
                }
                // adjacent (+,-) pairs spawn a ray on the hyperplane; the
                // combinatorial test rejects pairs whose common tight set is
                // dominated by a third ray
                for (size_t ip : pos) {
                    for (size_t in : neg) {
                        bool adjacent = true;
                        for (size_t k = 0; k < s.rays.size() && adjacent; ++k) {
                            if (k == ip || k == in) continue;
                            bool dominates = true;
                            for (size_t c = 0; c < done.size(); ++c)
                                if (tight[ip][c] && tight[in][c] && !tight[k][c]) {
                                    dominates = false;
                                    break;
                                }
                            if (dominates) adjacent = false;
                        }
                        if (!adjacent) continue;
                        IntVec w(D);
                        for (size_t j = 0; j < D; ++j)
                            w[j] = val[ip] * s.rays[in][j] - val[in] * s.rays[ip][j];
                        if (content(w) == 0) continue;
                        keep.push_back(make_primitive(std::move(w)));
                    }
                }
                std::sort(keep.begin(), keep.end());
                keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
                s.rays = std::move(keep);
            }
        }
        done.push_back(a);
        recompute_tight();
    }
    return s;
}

// halfspace scaled to an all-integer row (a | b) meaning a.x <= b
std::pair<IntVec, Int> integer_form(const Halfspace& h) {
    Int d = rat_den(h.rhs);
    IntVec a(h.normal.size());
    for (size_t i = 0; i < a.size(); ++i) a[i] = h.normal[i] * d;
    return {a, rat_num(h.rhs)};
}

std::vector<RatVec> vertices_from_halfspaces(size_t ambient, const std::vector<Halfspace>& hs) {
    std::vector<IntVec> cons;
    for (const Halfspace& h : hs) {
        auto [a, b] = integer_form(h);
        IntVec c(ambient + 1);
        c[0] = -b;
        for (size_t i = 0; i < ambient; ++i) c[i + 1] = a[i];
        cons.push_back(std::move(c));
    }
    {
        IntVec c(ambient + 1, 0);
        c[0] = -1;  // x0 >= 0
        cons.push_back(std::move(c));
    }
    ConeRep cone = double_description(cons, ambient + 1);
    std::vector<RatVec> verts;
    bool recession = !cone.lin.empty();
    for (const IntVec& r : cone.rays) {
        if (r[0] > 0) {
            RatVec v(ambient);
            for (size_t i = 0; i < ambient; ++i) v[i] = Rat(r[i + 1]) / r[0];
            verts.push_back(std::move(v));
        } else if (r[0] == 0) {
            recession = true;
        }
    }
    if (verts.empty()) throw EmptyPolytopeError{};
    if (recession) throw UnboundedPolytopeError{};
    return verts;
}

RatVec sub(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec add(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// primitive integer normal + rescaled rhs for (rational normal n, rhs r)
Halfspace normalize_halfspace(const RatVec& n, const Rat& r) {
    Int l = 1;
    for (const Rat& x : n) l = boost::multiprecision::lcm(l, rat_den(x));
    IntVec a(n.size());
    for (size_t i = 0; i < n.size(); ++i) a[i] = rat_num(n[i]) * (l / rat_den(n[i]));
    Int g = content(a);
    if (g == 0) throw std::invalid_argument("zero halfspace normal");
    for (Int& x : a) x /= g;
    return Halfspace{std::move(a), r * l / g};
}

}  // namespace

HullProjection hull_projection(const std::vector<RatVec>& points) {
    if (points.empty()) throw std::invalid_argument("hull_projection: no points");
    const size_t m = points[0].size();
    HullProjection hp;
    hp.anchor = points[0];
    RatMat dirs;
    for (size_t i = 1; i < points.size(); ++i) dirs.push_back(sub(points[i], hp.anchor));
    if (dirs.empty()) {
        hp.basis = IntMat{};
        hp.dim = 0;
        return hp;
    }
    IntMat d = scale_rows_to_int(dirs);
    IntMat orth = right_kernel(d);
    hp.basis = orth.empty() ? identity_mat(m) : right_kernel(orth);
    hp.dim = hp.basis.size();
    return hp;
}

RatVec HullProjection::project(const RatVec& x) const {
    RatVec rel = sub(x, anchor);
    if (dim == 0) return {};
    auto c = solve_left(to_rat(basis), rel);
    if (!c) throw std::logic_error("hull projection: point off the affine hull");
    return *c;
}

RatVec HullProjection::lift(const RatVec& c) const {
    RatVec x = anchor;
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < x.size(); ++j) x[j] += c[i] * basis[i][j];
    return x;
}

RationalPolytope RationalPolytope::from_vertices(size_t ambient, std::vector<RatVec> points) {
    if (ambient == 0) throw std::invalid_argument("ambient dimension must be positive");
    if (points.empty()) throw std::invalid_argument("from_vertices: no points");
    for (const RatVec& p : points)
        if (p.size() != ambient) throw std::invalid_argument("from_vertices: point dimension mismatch");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    RationalPolytope P;
    P.ambient_ = ambient;
    HullProjection proj = hull_projection(points);
    P.dim_ = proj.dim;

    // equations pinning the affine hull, one opposite pair each
    {
        RatMat dirs;
        for (size_t i = 1; i < points.size(); ++i) dirs.push_back(sub(points[i], proj.anchor));
        IntMat orth = dirs.empty() ? identity_mat(ambient) : right_kernel(scale_rows_to_int(dirs));
        for (const IntVec& a : orth) {
            Rat c = dot(a, proj.anchor);
            IntVec na(a.size());
            for (size_t i = 0; i < a.size(); ++i) na[i] = -a[i];
            P.hs_.push_back(Halfspace{a, c});
            P.hs_.push_back(Halfspace{na, -c});
        }
    }

    if (proj.dim == 0) {
        P.verts_ = {points[0]};
        std::sort(P.hs_.begin(), P.hs_.end());
        return P;
    }

    const size_t q = proj.dim;
    std::vector<RatVec> C;
    for (const RatVec& p : points) C.push_back(proj.project(p));
    RatVec centroid(q, 0);
    for (const RatVec& c : C)
        for (size_t j = 0; j < q; ++j) centroid[j] += c[j];
    for (size_t j = 0; j < q; ++j) centroid[j] /= Rat(C.size());

    // facets of the hull = vertices of the polar taken at the centroid
    std::vector<IntVec> cons;
    for (const RatVec& c : C) {
        RatVec rel = sub(c, centroid);
        Int l = 1;
        for (const Rat& x : rel) l = boost::multiprecision::lcm(l, rat_den(x));
        IntVec row(q + 1);
        row[0] = -l;
        for (size_t j = 0; j < q; ++j) row[j + 1] = rat_num(rel[j]) * (l / rat_den(rel[j]));
        cons.push_back(std::move(row));
    }
    {
        IntVec row(q + 1, 0);
        row[0] = -1;
        cons.push_back(std::move(row));
    }
    ConeRep cone = double_description(cons, q + 1);
    if (!cone.lin.empty()) throw std::logic_error("hull: polar cone has lineality");

    std::vector<std::pair<RatVec, Rat>> proj_facets;  // (normal, rhs) in hull coords
    for (const IntVec& r : cone.rays) {
        if (r[0] == 0) throw std::logic_error("hull: polar is unbounded");
        RatVec n(q);
        for (size_t j = 0; j < q; ++j) n[j] = Rat(r[j + 1]) / r[0];
        Rat rhs = 1 + dot(n, centroid);
        proj_facets.emplace_back(std::move(n), std::move(rhs));
    }

    // vertices: points whose tight facet normals span the hull
    std::vector<size_t> vert_idx;
    for (size_t i = 0; i < C.size(); ++i) {
        RatMat tight;
        for (const auto& [n, rhs] : proj_facets)
            if (dot(n, C[i]) == rhs) tight.push_back(n);
        if (tight.size() >= q && rat_rank(tight) == q) vert_idx.push_back(i);
    }
    for (size_t i : vert_idx) P.verts_.push_back(points[i]);

    // lift facet normals: solve basis * a^T = n^T, then pin rhs at the anchor
    RatMat bt = to_rat(transpose(proj.basis));  // m x q, rows indexed by ambient coord
    for (const auto& [n, rhs] : proj_facets) {
        auto a = solve_left(bt, n);  // a * basis^T... (a * bt = n) => basis * a^T = n^T
        if (!a) throw std::logic_error("hull: facet lift failed");
        Rat amb_rhs = rhs + dot(*a, proj.anchor);
        P.hs_.push_back(normalize_halfspace(*a, amb_rhs));
    }
    std::sort(P.hs_.begin(), P.hs_.end());
    P.hs_.erase(std::unique(P.hs_.begin(), P.hs_.end()), P.hs_.end());
    std::sort(P.verts_.begin(), P.verts_.end());
    return P;
}

RationalPolytope RationalPolytope::from_halfspaces(size_t ambient, std::vector<Halfspace> hs) {
    if (ambient == 0) throw std::invalid_argument("ambient dimension must be positive");
    for (const Halfspace& h : hs) {
        if (h.normal.size() != ambient)
            throw std::invalid_argument("from_halfspaces: normal dimension mismatch");
        if (content(h.normal) == 0)
            throw std::invalid_argument("from_halfspaces: zero normal");
    }
    return from_vertices(ambient, vertices_from_halfspaces(ambient, hs));
}

bool RationalPolytope::is_lattice() const {
    for (const RatVec& v : verts_)
        for (const Rat& x : v)
            if (!is_integer(x)) return false;
    return true;
}

bool RationalPolytope::contains(const RatVec& x) const {
    for (const Halfspace& h : hs_)
        if (dot(h.normal, x) > h.rhs) return false;
    return true;
}

bool RationalPolytope::contains_interior(const RatVec& x) const {
    for (const Halfspace& h : hs_)
        if (dot(h.normal, x) >= h.rhs) return false;
    return true;
}

RationalPolytope polar(const RationalPolytope& p) {
    if (p.dim() != p.ambient_dim())
        throw std::invalid_argument("polar: polytope is not full-dimensional");
    RatVec origin(p.ambient_dim(), 0);
    if (!p.contains_interior(origin))
        throw std::invalid_argument("polar: origin is not interior");
    std::vector<RatVec> duals;
    for (const Halfspace& h : p.halfspaces()) {
        RatVec v(h.normal.size());
        for (size_t i = 0; i < v.size(); ++i) v[i] = -Rat(h.normal[i]) / h.rhs;
        duals.push_back(std::move(v));
    }
    return RationalPolytope::from_vertices(p.ambient_dim(), std::move(duals));
}

RationalPolytope translate(const RationalPolytope& p, const RatVec& t) {
    std::vector<RatVec> vs;
    for (const RatVec& v : p.vertices()) vs.push_back(add(v, t));
    return RationalPolytope::from_vertices(p.ambient_dim(), std::move(vs));
}

RationalPolytope dual_at(const RationalPolytope& p, const RatVec& a) {
    RatVec neg(a.size());
    for (size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
    return polar(translate(p, neg));
}

// ---------------------------------------------------------------------------
// Lattice point enumeration: depth-first over coordinates with exact
// interval pruning. Each halfspace is held in all-integer form; suffix
// minima of the unfixed coordinates tighten the bound at every level.
// ---------------------------------------------------------------------------

namespace {

struct Enumerator {
    size_t m;
    std::vector<IntVec> A;   // scaled normals
    std::vector<Int> R;      // scaled rhs
    std::vector<Int> lo, hi; // coordinate box
    bool strict;
    // minrest[j][c] = min of sum A[j][i]*x_i over i >= c within the box
    std::vector<std::vector<Int>> minrest;

    std::vector<IntVec> points;
    Int count = 0;
    bool collect = true;

    void prepare() {
        minrest.assign(A.size(), std::vector<Int>(m + 1, 0));
        for (size_t j = 0; j < A.size(); ++j)
            for (size_t c = m; c-- > 0;) {
                Int lo_term = A[j][c] * lo[c], hi_term = A[j][c] * hi[c];
                minrest[j][c] = minrest[j][c + 1] + (lo_term < hi_term ? lo_term : hi_term);
            }
    }

    void run() {
        for (size_t c = 0; c < m; ++c)
            if (lo[c] > hi[c]) return;
        IntVec x(m, 0);
        std::vector<Int> partial(A.size(), 0);
        rec(0, x, partial);
    }

    void rec(size_t c, IntVec& x, std::vector<Int>& partial) {
        if (c == m) {
            if (collect) points.push_back(x);
            ++count;
            return;
        }
        Int L = lo[c], H = hi[c];
        for (size_t j = 0; j < A.size() && L <= H; ++j) {
            const Int& coef = A[j][c];
            if (coef == 0) continue;
            // coef * x_c  <=(:<)  R - partial - minrest(after c)
            Int room = R[j] - partial[j] - minrest[j][c + 1];
            if (coef > 0) {
                Int b = room >= 0 ? Int(room / coef) : Int(-((-room + coef - 1) / coef));
                if (strict && b * coef == room) --b;
                if (b < H) H = b;
            } else {
                Int nc = -coef;
                Int b = room >= 0 ? Int(-(room / nc)) : Int((-room + nc - 1) / nc);
                if (strict && -b * nc == room) ++b;
                if (b > L) L = b;
            }
        }
        for (Int v = L; v <= H; ++v) {
            x[c] = v;
            bool ok = true;
            for (size_t j = 0; j < A.size(); ++j) {
                partial[j] += A[j][c] * v;
                // fully determined at the last level; bounds make it sound
            }
            if (c + 1 == m) {
                for (size_t j = 0; j < A.size() && ok; ++j)
                    ok = strict ? partial[j] < R[j] : partial[j] <= R[j];
            }
            if (ok) rec(c + 1, x, partial);
            for (size_t j = 0; j < A.size(); ++j) partial[j] -= A[j][c] * v;
        }
        x[c] = 0;
    }
};

Enumerator make_enumerator(const RationalPolytope& p, const Int& k, bool strict) {
    Enumerator e;
    e.m = p.ambient_dim();
    e.strict = strict;
    for (const Halfspace& h : p.halfspaces()) {
        auto [a, b] = integer_form(h);
        e.A.push_back(std::move(a));
        e.R.push_back(b * k);
    }
    e.lo.assign(e.m, 0);
    e.hi.assign(e.m, 0);
    for (size_t c = 0; c < e.m; ++c) {
        Rat mn = p.vertices()[0][c], mx = mn;
        for (const RatVec& v : p.vertices()) {
            if (v[c] < mn) mn = v[c];
            if (v[c] > mx) mx = v[c];
        }
        e.lo[c] = rat_ceil(mn * k);
        e.hi[c] = rat_floor(mx * k);
    }
    e.prepare();
    return e;
}

}  // namespace

std::vector<IntVec> lattice_points(const RationalPolytope& p) {
    Enumerator e = make_enumerator(p, 1, false);
    e.run();
    return e.points;
}

std::vector<IntVec> interior_lattice_points(const RationalPolytope& p) {
    if (p.dim() < p.ambient_dim()) return {};
    Enumerator e = make_enumerator(p, 1, true);
    e.run();
    return e.points;
}

std::vector<Int> ehrhart_counts(const RationalPolytope& p, int k_max) {
    if (k_max < 1) throw std::invalid_argument("ehrhart_counts: k_max must be >= 1");
    std::vector<Int> out;
    for (int k = 1; k <= k_max; ++k) {
        Enumerator e = make_enumerator(p, k, false);
        e.collect = false;
        e.run();
        out.push_back(e.count);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Volume via recursive pyramid triangulation. Facets are triangulated in an
// injective coordinate projection, lifted back, and coned over a base vertex;
// simplex volumes are exact determinants.
// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<RatVec>> triangulate_fulldim(size_t q,
                                                     const std::vector<RatVec>& verts,
                                                     const std::vector<Halfspace>& hs) {
    if (verts.size() == q + 1) return {verts};
    const RatVec& v0 = verts[0];
    std::vector<std::vector<RatVec>> out;
    for (const Halfspace& h : hs) {
        if (dot(h.normal, v0) == h.rhs) continue;  // cone base excludes v0's facets
        std::vector<RatVec> F;
        for (const RatVec& v : verts)
            if (dot(h.normal, v) == h.rhs) F.push_back(v);
        if (F.size() < q) continue;  // safety; irredundant reps have q or more

        // injective projection of the facet: pivot columns of its directions
        RatMat dirs;
        for (size_t i = 1; i < F.size(); ++i) dirs.push_back(sub(F[i], F[0]));
        std::vector<size_t> cols;
        {
            RatMat g = dirs;
            size_t rank = 0;
            for (size_t c = 0; c < q && rank < g.size(); ++c) {
                size_t piv = g.size();
                for (size_t i = rank; i < g.size(); ++i)
                    if (g[i][c] != 0) { piv = i; break; }
                if (piv == g.size()) continue;
                std::swap(g[rank], g[piv]);
                for (size_t i = 0; i < g.size(); ++i) {
                    if (i == rank || g[i][c] == 0) continue;
                    Rat f = g[i][c] / g[rank][c];
                    for (size_t j = c; j < q; ++j) g[i][j] -= f * g[rank][j];
                }
                cols.push_back(c);
                ++rank;
            }
        }
        std::map<RatVec, RatVec> back;
        std::vector<RatVec> projF;
        for (const RatVec& v : F) {
            RatVec pv;
            for (size_t c : cols) pv.push_back(v[c]);
            back[pv] = v;
            projF.push_back(std::move(pv));
        }
        auto sub_poly = RationalPolytope::from_vertices(std::max<size_t>(cols.size(), 1), projF);
        auto sub_tris = triangulate_fulldim(cols.size(), sub_poly.vertices(), sub_poly.halfspaces());
        for (const auto& tri : sub_tris) {
            std::vector<RatVec> simplex{v0};
            for (const RatVec& pv : tri) simplex.push_back(back.at(pv));
            out.push_back(std::move(simplex));
        }
    }
    return out;
}

Rat volume_fulldim(size_t q, const std::vector<RatVec>& verts, const std::vector<Halfspace>& hs) {
    if (q == 0) return 1;
    Rat total = 0;
    for (const auto& s : triangulate_fulldim(q, verts, hs)) {
        RatMat d;
        for (size_t i = 1; i < s.size(); ++i) d.push_back(sub(s[i], s[0]));
        Rat dt = rat_det(d);
        total += dt < 0 ? -dt : dt;
    }
    Int fact = 1;
    for (size_t i = 2; i <= q; ++i) fact *= i;
    return total / fact;
}

}  // namespace

Rat volume(const RationalPolytope& p) {
    if (p.dim() < p.ambient_dim()) return 0;
    return volume_fulldim(p.dim(), p.vertices(), p.halfspaces());
}

Rat lattice_volume(const RationalPolytope& p) {
    if (p.dim() == p.ambient_dim()) return volume(p);
    if (p.dim() == 0) return 1;
    HullProjection proj = hull_projection(p.vertices());
    std::vector<RatVec> pv;
    for (const RatVec& v : p.vertices()) pv.push_back(proj.project(v));
    auto flat = RationalPolytope::from_vertices(proj.dim, std::move(pv));
    return volume_fulldim(proj.dim, flat.vertices(), flat.halfspaces());
}

RationalPolytope minkowski_sum(const RationalPolytope& p, const RationalPolytope& q) {
    if (p.ambient_dim() != q.ambient_dim())
        throw std::invalid_argument("minkowski_sum: ambient dimension mismatch");
    std::vector<RatVec> sums;
    for (const RatVec& a : p.vertices())
        for (const RatVec& b : q.vertices()) sums.push_back(add(a, b));
    return RationalPolytope::from_vertices(p.ambient_dim(), std::move(sums));
}

std::optional<RationalPolytope> slice(const RationalPolytope& p, const IntVec& w, const Rat& h) {
    if (w.size() != p.ambient_dim()) throw std::invalid_argument("slice: w dimension mismatch");
    if (content(w) == 0) throw std::invalid_argument("slice: zero direction");
    std::vector<Halfspace> hs = p.halfspaces();
    IntVec nw(w.size());
    for (size_t i = 0; i < w.size(); ++i) nw[i] = -w[i];
    hs.push_back(Halfspace{w, h});
    hs.push_back(Halfspace{nw, -h});
    try {
        return RationalPolytope::from_halfspaces(p.ambient_dim(), std::move(hs));
    } catch (const EmptyPolytopeError&) {
        return std::nullopt;
    }
}

RationalPolytope apply_affine(const RationalPolytope& p, const IntMat& m, const IntVec& t) {
    if (mat_rows(m) != p.ambient_dim() || t.size() != mat_cols(m))
        throw std::invalid_argument("apply_affine: shape mismatch");
    if (!is_unimodular(m)) throw std::invalid_argument("apply_affine: matrix is not unimodular");
    std::vector<RatVec> vs;
    for (const RatVec& v : p.vertices()) {
        RatVec y = mul_vec_mat(v, m);
        for (size_t i = 0; i < y.size(); ++i) y[i] += t[i];
        vs.push_back(std::move(y));
    }
    return RationalPolytope::from_vertices(mat_cols(m), std::move(vs));
}

std::vector<std::vector<bool>> vertex_facet_incidence(const RationalPolytope& p) {
    std::vector<std::vector<bool>> inc(p.vertices().size(),
                                       std::vector<bool>(p.halfspaces().size(), false));
    for (size_t i = 0; i < p.vertices().size(); ++i)
        for (size_t j = 0; j < p.halfspaces().size(); ++j)
            inc[i][j] = dot(p.halfspaces()[j].normal, p.vertices()[i]) == p.halfspaces()[j].rhs;
    return inc;
}

std::vector<std::vector<size_t>> vertex_adjacency(const RationalPolytope& p) {
    const auto inc = vertex_facet_incidence(p);
    const size_t n = p.vertices().size();
    std::vector<std::vector<size_t>> adj(n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            RatMat common;
            for (size_t f = 0; f < p.halfspaces().size(); ++f)
                if (inc[i][f] && inc[j][f]) common.push_back(to_rat(p.halfspaces()[f].normal));
            if (common.size() + 1 >= p.ambient_dim() &&
                rat_rank(common) + 1 == p.ambient_dim()) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }
    }
    return adj;
}

// ---------------------------------------------------------------------------
// Affine-unimodular equivalence search: anchor a vertex frame in P, try
// fingerprint-compatible frames in Q, verify candidates exactly. Exhausting
// the candidate space is a definitive "no"; overrunning the budget is not.
// ---------------------------------------------------------------------------

namespace {

IntVec int_diff(const RatVec& a, const RatVec& b) {
    IntVec d(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        Rat x = a[i] - b[i];
        if (!is_integer(x)) throw std::invalid_argument("equivalence: non-lattice vertex");
        d[i] = rat_num(x);
    }
    return d;
}

// multiset of lattice distances (contents of difference vectors) to all other
// vertices; invariant under affine-unimodular maps
std::vector<Int> distance_fingerprint(const std::vector<RatVec>& verts, size_t i) {
    std::vector<Int> f;
    for (size_t j = 0; j < verts.size(); ++j) {
        if (j == i) continue;
        f.push_back(content(int_diff(verts[j], verts[i])));
    }
    std::sort(f.begin(), f.end());
    return f;
}

EquivalenceResult search_fulldim(const RationalPolytope& p, const RationalPolytope& q,
                                 size_t budget) {
    const size_t d = p.ambient_dim();
    const auto& VP = p.vertices();
    const auto& VQ = q.vertices();
    EquivalenceResult res;

    auto adjP = vertex_adjacency(p);
    auto adjQ = vertex_adjacency(q);
    {
        std::vector<size_t> degP, degQ;
        for (auto& a : adjP) degP.push_back(a.size());
        for (auto& a : adjQ) degQ.push_back(a.size());
        std::sort(degP.begin(), degP.end());
        std::sort(degQ.begin(), degQ.end());
        if (degP != degQ) return res;  // definitive no
    }

    // anchor: minimal degree, lexicographic tiebreak (vertices are sorted)
    size_t v0 = 0;
    for (size_t i = 1; i < VP.size(); ++i)
        if (adjP[i].size() < adjP[v0].size()) v0 = i;

    // a linearly independent frame among v0's neighbors
    std::vector<size_t> frame;
    RatMat dirs;
    for (size_t n : adjP[v0]) {
        RatMat trial = dirs;
        trial.push_back(to_rat(int_diff(VP[n], VP[v0])));
        if (rat_rank(trial) == trial.size()) {
            dirs = std::move(trial);
            frame.push_back(n);
            if (frame.size() == d) break;
        }
    }
    if (frame.size() != d) throw std::logic_error("equivalence: degenerate vertex frame");

    auto dp_inv = rat_inverse(dirs);
    std::vector<Int> gcdP(d);
    for (size_t i = 0; i < d; ++i) gcdP[i] = content(int_diff(VP[frame[i]], VP[v0]));
    auto fpV0 = distance_fingerprint(VP, v0);
    std::vector<std::vector<Int>> fpFrame(d);
    for (size_t i = 0; i < d; ++i) fpFrame[i] = distance_fingerprint(VP, frame[i]);
    std::vector<std::vector<Int>> fpQ(VQ.size());
    for (size_t i = 0; i < VQ.size(); ++i) fpQ[i] = distance_fingerprint(VQ, i);

    size_t tried = 0;
    std::vector<RatVec> sortedQ = VQ;  // already sorted by construction

    std::vector<size_t> pick(d);
    std::vector<bool> used;
    bool exhausted_cleanly = true;

    std::function<bool(size_t, size_t)> extend = [&](size_t u0, size_t level) -> bool {
        if (level == d) {
            if (++tried > budget) { exhausted_cleanly = false; return false; }
            RatMat dq;
            for (size_t i = 0; i < d; ++i) dq.push_back(to_rat(int_diff(VQ[pick[i]], VQ[u0])));
            RatMat mr(d, RatVec(d));
            for (size_t r = 0; r < d; ++r)
                for (size_t c = 0; c < d; ++c) {
                    Rat s = 0;
                    for (size_t k = 0; k < d; ++k) s += (*dp_inv)[r][k] * dq[k][c];
                    mr[r][c] = s;
                }
            IntMat m(d, IntVec(d));
            for (size_t r = 0; r < d; ++r)
                for (size_t c = 0; c < d; ++c) {
                    if (!is_integer(mr[r][c])) return false;
                    m[r][c] = rat_num(mr[r][c]);
                }
            if (!is_unimodular(m)) return false;
            IntVec t(d);
            RatVec img = mul_vec_mat(VP[v0], m);
            for (size_t i = 0; i < d; ++i) {
                Rat x = Rat(VQ[u0][i]) - img[i];
                if (!is_integer(x)) return false;
                t[i] = rat_num(x);
            }
            std::vector<RatVec> mapped;
            for (const RatVec& v : VP) {
                RatVec y = mul_vec_mat(v, m);
                for (size_t i = 0; i < d; ++i) y[i] += t[i];
                mapped.push_back(std::move(y));
            }
            std::sort(mapped.begin(), mapped.end());
            if (mapped != sortedQ) return false;
            res.certificate = std::make_pair(m, t);
            return true;
        }
        for (size_t n : adjQ[u0]) {
            if (used[n]) continue;
            if (content(int_diff(VQ[n], VQ[u0])) != gcdP[level]) continue;
            if (fpQ[n] != fpFrame[level]) continue;
            used[n] = true;
            pick[level] = n;
            if (extend(u0, level + 1)) return true;
            used[n] = false;
            if (!exhausted_cleanly) return false;
        }
        return false;
    };

    for (size_t u0 = 0; u0 < VQ.size(); ++u0) {
        if (adjQ[u0].size() != adjP[v0].size()) continue;
        if (fpQ[u0] != fpV0) continue;
        used.assign(VQ.size(), false);
        if (extend(u0, 0)) return res;
        if (!exhausted_cleanly) break;
    }
    res.inconclusive = !exhausted_cleanly;
    return res;
}

}  // namespace

EquivalenceResult affine_unimodular_equivalent(const RationalPolytope& p,
                                               const RationalPolytope& q,
                                               size_t frame_budget) {
    if (!p.is_lattice() || !q.is_lattice())
        throw std::invalid_argument("equivalence: both polytopes must be lattice polytopes");
    EquivalenceResult res;
    if (p.dim() != q.dim() || p.ambient_dim() != q.ambient_dim()) return res;
    if (p.vertices().size() != q.vertices().size()) return res;
    if (p.halfspaces().size() != q.halfspaces().size()) return res;
    if (lattice_volume(p) != lattice_volume(q)) return res;

    if (p.dim() == 0) {
        IntMat m = identity_mat(p.ambient_dim());
        IntVec t(p.ambient_dim());
        for (size_t i = 0; i < t.size(); ++i)
            t[i] = rat_num(q.vertices()[0][i]) - rat_num(p.vertices()[0][i]);
        res.certificate = std::make_pair(m, t);
        return res;
    }

    if (p.dim() == p.ambient_dim()) return search_fulldim(p, q, frame_budget);

    // lower-dimensional: search inside the affine hulls, lift the certificate
    HullProjection prP = hull_projection(p.vertices());
    HullProjection prQ = hull_projection(q.vertices());
    auto flatten = [](const RationalPolytope& x, const HullProjection& pr) {
        std::vector<RatVec> pts;
        for (const RatVec& v : x.vertices()) pts.push_back(pr.project(v));
        return RationalPolytope::from_vertices(pr.dim, std::move(pts));
    };
    RationalPolytope fp = flatten(p, prP), fq = flatten(q, prQ);
    EquivalenceResult inner = search_fulldim(fp, fq, frame_budget);
    if (!inner.certificate) {
        res.inconclusive = inner.inconclusive;
        return res;
    }
    const size_t q_dim = prP.dim, m_amb = p.ambient_dim();
    IntMat wp = complete_basis(prP.basis);
    IntMat wq = complete_basis(prQ.basis);
    auto wp_inv_rat = rat_inverse(to_rat(wp));
    IntMat wp_inv = scale_rows_to_int(*wp_inv_rat);
    IntMat block = identity_mat(m_amb);
    for (size_t i = 0; i < q_dim; ++i)
        for (size_t j = 0; j < q_dim; ++j) block[i][j] = inner.certificate->first[i][j];
    IntMat m_map = mul_mat(mul_mat(wp_inv, block), wq);
    // t = lift_Q(t') + anchor_Q - anchor_P * m
    IntVec t(m_amb, 0);
    RatVec lift_t = prQ.anchor;
    for (size_t i = 0; i < q_dim; ++i)
        for (size_t j = 0; j < m_amb; ++j)
            lift_t[j] += Rat(inner.certificate->second[i]) * prQ.basis[i][j];
    RatVec moved = mul_vec_mat(prP.anchor, m_map);
    for (size_t j = 0; j < m_amb; ++j) {
        Rat x = lift_t[j] - moved[j];
        if (!is_integer(x)) throw std::logic_error("equivalence: certificate lift not integral");
        t[j] = rat_num(x);
    }
    // verify in ambient coordinates before returning
    std::vector<RatVec> mapped;
    for (const RatVec& v : p.vertices()) {
        RatVec y = mul_vec_mat(v, m_map);
        for (size_t j = 0; j < m_amb; ++j) y[j] += t[j];
        mapped.push_back(std::move(y));
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped != q.vertices()) throw std::logic_error("equivalence: lifted certificate failed");
    res.certificate = std::make_pair(m_map, t);
    return res;
}

}  // namespace polymut
