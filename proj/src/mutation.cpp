#include "polymut/mutation.hpp"

#include <algorithm>
#include <map>

namespace polymut {

namespace {

IntVec int_vertex(const RatVec& v) {
    IntVec x(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (!is_integer(v[i])) throw std::invalid_argument("expected a lattice vertex");
        x[i] = rat_num(v[i]);
    }
    return x;
}

}  // namespace

MutationDatum make_datum(IntVec w, RationalPolytope factor) {
    if (w.size() != factor.ambient_dim())
        throw std::invalid_argument("mutation datum: dimension mismatch");
    Int c = content(w);
    if (c == 0) throw std::invalid_argument("mutation datum: w must be nonzero");
    if (c != 1) throw std::invalid_argument("mutation datum: w must be primitive");
    if (!factor.is_lattice())
        throw std::invalid_argument("mutation datum: factor must be a lattice polytope");
    for (const RatVec& v : factor.vertices())
        if (dot(w, v) != 0)
            throw std::invalid_argument("mutation datum: factor must lie in the hyperplane w-perp");
    return MutationDatum{std::move(w), std::move(factor)};
}

RatVec phi_point(const MutationDatum& d, const RatVec& u) {
    if (u.size() != d.w.size()) throw std::invalid_argument("phi_point: dimension mismatch");
    Rat umin = dot(u, d.factor.vertices()[0]);
    for (const RatVec& v : d.factor.vertices()) {
        Rat t = dot(u, v);
        if (t < umin) umin = t;
    }
    RatVec out(u.size());
    for (size_t i = 0; i < u.size(); ++i) out[i] = u[i] - umin * d.w[i];
    return out;
}

RatVec phi_inverse(const MutationDatum& d, const RatVec& u) {
    IntVec nw(d.w.size());
    for (size_t i = 0; i < d.w.size(); ++i) nw[i] = -d.w[i];
    MutationDatum rev{std::move(nw), d.factor};
    return phi_point(rev, u);
}

std::variant<RationalPolytope, NonConvexImage> phi_polytope(const MutationDatum& d,
                                                            const RationalPolytope& q) {
    if (q.ambient_dim() != d.w.size()) throw std::invalid_argument("phi_polytope: dimension mismatch");
    const size_t m = q.ambient_dim();
    const size_t qdim = q.dim();

    std::vector<RationalPolytope> images;
    for (const RatVec& vr : d.factor.vertices()) {
        IntVec v = int_vertex(vr);
        // cell where v attains the minimum of <u, .> over the factor vertices
        std::vector<Halfspace> hs = q.halfspaces();
        for (const RatVec& wr : d.factor.vertices()) {
            IntVec diff = int_vertex(wr);
            bool zero = true;
            for (size_t i = 0; i < m; ++i) {
                diff[i] = v[i] - diff[i];
                if (diff[i] != 0) zero = false;
            }
            if (zero) continue;
            hs.push_back(Halfspace{std::move(diff), 0});
        }
        std::optional<RationalPolytope> cell;
        try {
            cell = RationalPolytope::from_halfspaces(m, std::move(hs));
        } catch (const EmptyPolytopeError&) {
        }
        if (!cell || cell->dim() < qdim) continue;
        // shear u -> u - <u,v> w; integral with determinant one since <w,v>=0
        IntMat shear = identity_mat(m);
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) shear[i][j] -= v[i] * d.w[j];
        images.push_back(apply_affine(*cell, shear, IntVec(m, 0)));
    }
    std::sort(images.begin(), images.end(),
              [](const RationalPolytope& a, const RationalPolytope& b) {
                  return a.vertices() < b.vertices();
              });
    images.erase(std::unique(images.begin(), images.end()), images.end());

    std::vector<RatVec> pts;
    Rat piece_sum = 0;
    for (const RationalPolytope& im : images) {
        piece_sum += lattice_volume(im);
        for (const RatVec& v : im.vertices()) pts.push_back(v);
    }
    RationalPolytope hull = RationalPolytope::from_vertices(m, std::move(pts));
    Rat hull_vol = lattice_volume(hull);
    if (hull.dim() != qdim || hull_vol != piece_sum)
        return NonConvexImage{std::move(hull), std::move(hull_vol), std::move(piece_sum)};
    return hull;
}

std::optional<RationalPolytope> g_slice(const MutationDatum& d, const RationalPolytope& p,
                                        const Int& h) {
    if (p.ambient_dim() != d.w.size()) throw std::invalid_argument("g_slice: dimension mismatch");
    if (h >= 0) throw std::invalid_argument("g_slice: level must be negative");
    Int depth = -h;
    // erode: each halfspace retreats by depth * max_{v in F} <a, v>
    std::vector<Halfspace> hs;
    for (const Halfspace& f : p.halfspaces()) {
        Rat worst = dot(f.normal, d.factor.vertices()[0]);
        for (const RatVec& v : d.factor.vertices()) {
            Rat t = dot(f.normal, v);
            if (t > worst) worst = t;
        }
        hs.push_back(Halfspace{f.normal, f.rhs - worst * depth});
    }
    IntVec nw(d.w.size());
    for (size_t i = 0; i < d.w.size(); ++i) nw[i] = -d.w[i];
    hs.push_back(Halfspace{d.w, Rat(h)});
    hs.push_back(Halfspace{nw, Rat(-h)});
    std::vector<IntVec> latt;
    try {
        RationalPolytope eroded = RationalPolytope::from_halfspaces(p.ambient_dim(), std::move(hs));
        latt = lattice_points(eroded);
    } catch (const EmptyPolytopeError&) {
        return std::nullopt;
    }
    if (latt.empty()) return std::nullopt;
    std::vector<RatVec> pts;
    for (const IntVec& x : latt) pts.push_back(to_rat(x));
    return RationalPolytope::from_vertices(p.ambient_dim(), std::move(pts));
}

std::variant<RationalPolytope, NotWellDefined> mutate(const MutationDatum& d,
                                                      const RationalPolytope& p) {
    if (p.ambient_dim() != d.w.size()) throw std::invalid_argument("mutate: dimension mismatch");
    if (!p.is_lattice()) throw std::invalid_argument("mutate: expected a lattice polytope");

    Int hmin = 0, hmax = 0;
    bool first = true;
    for (const RatVec& v : p.vertices()) {
        Rat lv = dot(d.w, v);
        Int l = rat_num(lv);  // lattice vertex, integer w => integer level
        if (first || l < hmin) hmin = l;
        if (first || l > hmax) hmax = l;
        first = false;
    }

    std::map<Int, RationalPolytope> g;
    for (Int h = hmin; h <= Int(-1); ++h) {
        auto gh = g_slice(d, p, h);
        if (gh) g.emplace(h, std::move(*gh));
    }

    // every vertex on a negative level must be recovered by fattening its
    // eroded lattice slice, otherwise the mutation is undefined
    for (const RatVec& v : p.vertices()) {
        Int l = rat_num(dot(d.w, v));
        if (l >= 0) continue;
        auto it = g.find(l);
        if (it == g.end()) return NotWellDefined{v, l};
        RationalPolytope fat = it->second;
        for (Int i = 0; i < -l; ++i) fat = minkowski_sum(fat, d.factor);
        if (!fat.contains(v)) return NotWellDefined{v, l};
    }

    std::vector<RatVec> pts;
    for (const auto& [h, gh] : g)
        for (const RatVec& v : gh.vertices()) pts.push_back(v);
    for (Int h = 0; h <= hmax; ++h) {
        auto sl = slice(p, d.w, Rat(h));
        if (!sl) continue;
        for (const RatVec& sv : sl->vertices())
            for (const RatVec& fv : d.factor.vertices()) {
                RatVec x(sv.size());
                for (size_t i = 0; i < x.size(); ++i) x[i] = sv[i] + Rat(h) * fv[i];
                pts.push_back(std::move(x));
            }
    }
    return RationalPolytope::from_vertices(p.ambient_dim(), std::move(pts));
}

bool duality_holds(const MutationDatum& d, const RationalPolytope& p) {
    auto mutated = mutate(d, p);
    if (!std::holds_alternative<RationalPolytope>(mutated))
        throw std::invalid_argument("duality_holds: mutation is not well defined");
    auto image = phi_polytope(d, polar(p));
    if (!std::holds_alternative<RationalPolytope>(image))
        throw std::invalid_argument("duality_holds: piecewise image is not convex");
    return std::get<RationalPolytope>(image) == polar(std::get<RationalPolytope>(mutated));
}

std::variant<RationalPolytope, TraceFailure> apply_trace(const MutationTrace& t,
                                                         const RationalPolytope& start) {
    RationalPolytope cur = start;
    for (size_t i = 0; i < t.steps.size(); ++i) {
        const TraceStep& s = t.steps[i];
        if (s.translate) cur = translate(cur, *s.translate);
        if (s.map) {
            auto img = phi_polytope(*s.map, cur);
            if (auto* bad = std::get_if<NonConvexImage>(&img))
                return TraceFailure{i, std::move(*bad)};
            cur = std::move(std::get<RationalPolytope>(img));
        }
    }
    return cur;
}

}  // namespace polymut
