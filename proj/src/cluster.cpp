#include "polymut/cluster.hpp"

#include <algorithm>
#include <map>
#include <deque>
#include <stdexcept>
#include <utility>
#include <variant>

namespace polymut {

namespace {

int sgn(const Int& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

Int pos_part(const Int& x) { return x > 0 ? x : Int(0); }
Rat pos_part(const Rat& x) { return x > 0 ? x : Rat(0); }

}  // namespace

bool Seed::is_unfrozen(size_t k) const {
    return std::binary_search(unfrozen.begin(), unfrozen.end(), k);
}

size_t Seed::row_of(size_t k) const {
    auto it = std::lower_bound(unfrozen.begin(), unfrozen.end(), k);
    if (it == unfrozen.end() || *it != k)
        throw std::invalid_argument("seed: index is frozen or out of range");
    return static_cast<size_t>(it - unfrozen.begin());
}

Seed make_seed(IntMat eps, std::vector<size_t> unfrozen) {
    if (eps.size() != unfrozen.size())
        throw std::invalid_argument("seed: one exchange row per unfrozen index required");
    size_t cols = eps.empty() ? 0 : eps[0].size();
    for (const auto& row : eps)
        if (row.size() != cols) throw std::invalid_argument("seed: ragged exchange matrix");
    for (size_t a = 0; a < unfrozen.size(); ++a) {
        if (unfrozen[a] >= cols) throw std::invalid_argument("seed: unfrozen index out of range");
        if (a > 0 && unfrozen[a] <= unfrozen[a - 1])
            throw std::invalid_argument("seed: unfrozen indices must strictly increase");
    }

    size_t n = unfrozen.size();
    auto block = [&](size_t a, size_t b) -> const Int& { return eps[a][unfrozen[b]]; };
    for (size_t a = 0; a < n; ++a) {
        if (block(a, a) != 0)
            throw std::invalid_argument("seed: unfrozen block has nonzero diagonal");
        for (size_t b = a + 1; b < n; ++b)
            if (sgn(block(a, b)) != -sgn(block(b, a)))
                throw std::invalid_argument("seed: unfrozen block is not sign-skew");
    }
    // Positive symmetrizers exist iff the ratio relation d_b = d_a e_ab / (-e_ba)
    // is consistent around every cycle of the nonzero pattern.
    std::vector<Rat> d(n, 0);
    for (size_t start = 0; start < n; ++start) {
        if (d[start] != 0) continue;
        d[start] = 1;
        std::deque<size_t> queue{start};
        while (!queue.empty()) {
            size_t a = queue.front();
            queue.pop_front();
            for (size_t b = 0; b < n; ++b) {
                if (block(a, b) == 0) continue;
                Rat want = d[a] * block(a, b) / Rat(-block(b, a));
                if (d[b] == 0) {
                    d[b] = want;
                    queue.push_back(b);
                } else if (d[b] != want) {
                    throw std::invalid_argument("seed: unfrozen block is not skew-symmetrizable");
                }
            }
        }
    }

    Seed s;
    s.eps = std::move(eps);
    s.unfrozen = std::move(unfrozen);
    return s;
}

Seed mutate_matrix(const Seed& s, size_t k) {
    size_t r = s.row_of(k);
    size_t cols = s.vars();
    Seed out = s;
    for (size_t a = 0; a < s.eps.size(); ++a) {
        bool row_is_k = (s.unfrozen[a] == k);
        for (size_t j = 0; j < cols; ++j) {
            if (row_is_k || j == k) {
                out.eps[a][j] = -s.eps[a][j];
            } else {
                out.eps[a][j] =
                    s.eps[a][j] + sgn(s.eps[a][k]) * pos_part(Int(s.eps[a][k] * s.eps[r][j]));
            }
        }
    }
    return out;
}

bool dominance_leq(const Seed& s, const IntVec& a, const IntVec& b) {
    size_t cols = s.vars();
    if (a.size() != b.size() || (!s.unfrozen.empty() && a.size() != cols))
        throw std::invalid_argument("dominance: dimension mismatch");
    if (a == b) return true;
    size_t n = s.unfrozen.size();
    if (n == 0) return false;

    // u ranges over the polytope {u >= 0, u * eps = a - b}; a <= b iff it
    // holds a lattice point.
    std::vector<Halfspace> rows;
    for (size_t i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = -1;
        rows.push_back({e, 0});
    }
    for (size_t j = 0; j < cols; ++j) {
        IntVec col(n);
        for (size_t i = 0; i < n; ++i) col[i] = s.eps[i][j];
        Rat c = Rat(a[j] - b[j]);
        rows.push_back({col, c});
        IntVec neg(n);
        for (size_t i = 0; i < n; ++i) neg[i] = -col[i];
        rows.push_back({neg, -c});
    }
    try {
        RationalPolytope q = RationalPolytope::from_halfspaces(n, rows);
        return !lattice_points(q).empty();
    } catch (const EmptyPolytopeError&) {
        return false;
    } catch (const UnboundedPolytopeError&) {
        // Degenerate exchange matrix with a nonnegative left-kernel ray.
        // Fall back to an exhaustive box scan; the bound is heuristic and
        // only reached for inputs no generator here produces.
        if (n > 4) throw std::runtime_error("dominance: unbounded degenerate system");
        const Int cap = 30;
        IntVec u(n, 0);
        while (true) {
            IntVec img(cols, 0);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < cols; ++j) img[j] += u[i] * s.eps[i][j];
            bool ok = true;
            for (size_t j = 0; j < cols && ok; ++j) ok = (img[j] == a[j] - b[j]);
            if (ok) return true;
            size_t i = 0;
            while (i < n && u[i] == cap) u[i++] = 0;
            if (i == n) return false;
            ++u[i];
        }
    }
}

RatVec tropical_mutate_point(const Seed& s, size_t k, const RatVec& g) {
    size_t r = s.row_of(k);
    if (g.size() != s.vars()) throw std::invalid_argument("tropical exchange: dimension mismatch");
    RatVec out(g.size());
    Rat gk_pos = pos_part(g[k]);
    for (size_t j = 0; j < g.size(); ++j) {
        if (j == k) {
            out[j] = -g[j];
        } else {
            const Int& e = s.eps[r][j];
            out[j] = g[j] + pos_part(Int(-e)) * g[k] + e * gk_pos;
        }
    }
    return out;
}

TropicalStep decompose_tropical(const Seed& s, size_t k) {
    size_t r = s.row_of(k);
    const IntVec& row = s.eps[r];
    Int c = content(row);
    if (c == 0) throw std::invalid_argument("tropical split: exchange row is zero");
    auto [w, scale] = primitive_part(row);
    (void)scale;

    size_t m = s.vars();
    RatVec origin(m, 0), tip(m, 0);
    tip[k] = Rat(-c);
    RationalPolytope factor = RationalPolytope::from_vertices(m, {origin, tip});

    IntMat post = identity_mat(m);
    for (size_t j = 0; j < m; ++j) {
        Int u = (j == k) ? Int(2) : (row[j] < 0 ? row[j] : Int(0));
        post[k][j] -= u;
    }
    return {make_datum(w, std::move(factor)), std::move(post)};
}

SeedGraphNode tropical_mutate_polytope(const SeedGraphNode& node, size_t k) {
    TropicalStep step = decompose_tropical(node.seed, k);
    auto image = phi_polytope(step.piecewise, node.payload);
    if (std::holds_alternative<NonConvexImage>(image))
        throw std::runtime_error("tropical exchange: payload image is not convex");
    size_t m = node.payload.ambient_dim();
    RationalPolytope moved =
        apply_affine(std::get<RationalPolytope>(image), step.linear, IntVec(m, 0));
    SeedGraphNode out{mutate_matrix(node.seed, k), std::move(moved), node.path};
    out.path.push_back(k);
    return out;
}

namespace {

ExploreEntry make_entry(SeedGraphNode node) {
    ExploreEntry entry{std::move(node), 1, {}, {}, {}};
    entry.interior_points = interior_lattice_points(entry.node.payload);
    if (entry.interior_points.size() == 1) {
        RationalPolytope dual = dual_at(entry.node.payload, to_rat(entry.interior_points[0]));
        entry.dual_is_lattice = dual.is_lattice();
        entry.dual_ehrhart = ehrhart_counts(dual, 2);
    }
    return entry;
}

}  // namespace

ExploreResult explore(const SeedGraphNode& root, size_t depth) {
    ExploreResult result;
    using Key = std::pair<IntMat, std::vector<RatVec>>;
    std::map<Key, size_t> seen;

    struct Item {
        SeedGraphNode node;
        std::optional<size_t> last;
    };
    std::deque<Item> queue{{root, std::nullopt}};
    while (!queue.empty()) {
        Item item = std::move(queue.front());
        queue.pop_front();
        ++result.visited;

        Key key{item.node.seed.eps, item.node.payload.vertices()};
        auto [it, fresh] = seen.emplace(std::move(key), result.entries.size());
        if (fresh) {
            result.entries.push_back(make_entry(item.node));
        } else {
            ++result.entries[it->second].multiplicity;
        }

        if (item.node.path.size() < depth) {
            for (size_t k : item.node.seed.unfrozen) {
                if (item.last && *item.last == k) continue;
                queue.push_back({tropical_mutate_polytope(item.node, k), k});
            }
        }
    }
    return result;
}

}  // namespace polymut
