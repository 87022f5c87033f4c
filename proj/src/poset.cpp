#include "polymut/poset.hpp"

#include "polymut/intlinalg.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

namespace polymut {

namespace {

constexpr size_t npos = static_cast<size_t>(-1);

RatVec negated(const RatVec& v) {
    RatVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

}  // namespace

MarkedPoset MarkedPoset::create(std::vector<std::string> elements,
                                std::vector<std::pair<std::string, std::string>> covers,
                                std::map<std::string, Int> marking) {
    MarkedPoset mp;
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < elements.size(); ++i)
        if (!index.emplace(elements[i], i).second)
            throw std::invalid_argument("poset: duplicate element label");
    auto lookup = [&](const std::string& label) {
        auto it = index.find(label);
        if (it == index.end()) throw std::invalid_argument("poset: unknown label " + label);
        return it->second;
    };

    size_t n = elements.size();
    mp.elements_ = std::move(elements);
    mp.lower_.resize(n);
    mp.upper_.resize(n);
    std::set<std::pair<size_t, size_t>> seen;
    for (const auto& [lo, hi] : covers) {
        size_t a = lookup(lo), b = lookup(hi);
        if (a == b) throw std::invalid_argument("poset: self-cover");
        if (!seen.insert({a, b}).second) continue;
        mp.covers_.push_back({a, b});
        mp.lower_[b].push_back(a);
        mp.upper_[a].push_back(b);
    }
    for (const auto& [label, value] : marking) mp.marking_.emplace(lookup(label), value);

    // acyclic: Kahn's algorithm must consume every element
    std::vector<size_t> need(n);
    std::deque<size_t> ready;
    for (size_t e = 0; e < n; ++e)
        if ((need[e] = mp.lower_[e].size()) == 0) ready.push_back(e);
    size_t done = 0;
    while (!ready.empty()) {
        size_t e = ready.front();
        ready.pop_front();
        ++done;
        for (size_t f : mp.upper_[e])
            if (--need[f] == 0) ready.push_back(f);
    }
    if (done != n) throw std::invalid_argument("poset: covers contain a cycle");

    mp.coord_.assign(n, npos);
    for (size_t e = 0; e < n; ++e) {
        bool marked = mp.marking_.count(e) != 0;
        if (!marked) {
            if (mp.lower_[e].empty() || mp.upper_[e].empty())
                throw std::invalid_argument("poset: minimal and maximal elements must be marked");
            mp.coord_[e] = mp.unmarked_.size();
            mp.unmarked_.push_back(e);
        }
    }

    // marking monotone along the order
    for (const auto& [a, va] : mp.marking_) {
        std::deque<size_t> queue{a};
        std::vector<bool> hit(n, false);
        hit[a] = true;
        while (!queue.empty()) {
            size_t e = queue.front();
            queue.pop_front();
            for (size_t f : mp.upper_[e]) {
                if (hit[f]) continue;
                hit[f] = true;
                auto it = mp.marking_.find(f);
                if (it != mp.marking_.end() && it->second < va)
                    throw std::invalid_argument("poset: marking decreases upward");
                queue.push_back(f);
            }
        }
    }
    return mp;
}

bool MarkedPoset::is_marked(size_t e) const { return marking_.count(e) != 0; }

const Int& MarkedPoset::marker(size_t e) const {
    auto it = marking_.find(e);
    if (it == marking_.end()) throw std::invalid_argument("poset: element is not marked");
    return it->second;
}

size_t MarkedPoset::index_of(const std::string& label) const {
    for (size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i] == label) return i;
    throw std::invalid_argument("poset: unknown label " + label);
}

size_t MarkedPoset::coord_of(size_t e) const {
    if (e >= coord_.size() || coord_[e] == npos)
        throw std::invalid_argument("poset: element has no coordinate");
    return coord_[e];
}

namespace {

std::vector<size_t> pi_prime_indices(const MarkedPoset& mp,
                                     const std::vector<std::string>& labels) {
    std::set<size_t> out;
    for (const auto& label : labels) {
        size_t e = mp.index_of(label);
        if (mp.is_marked(e))
            throw std::invalid_argument("poset: " + label + " is marked");
        if (!out.insert(e).second)
            throw std::invalid_argument("poset: duplicate element in pi_prime");
    }
    return {out.begin(), out.end()};
}

std::vector<std::string> all_unmarked_labels(const MarkedPoset& mp) {
    std::vector<std::string> out;
    for (size_t e : mp.unmarked()) out.push_back(mp.elements()[e]);
    return out;
}

}  // namespace

RationalPolytope chain_order_polytope(const MarkedPoset& mp,
                                      const std::vector<std::string>& pi_prime) {
    auto pi = pi_prime_indices(mp, pi_prime);
    auto in_pi = [&](size_t e) { return std::binary_search(pi.begin(), pi.end(), e); };
    size_t n = mp.unmarked().size();

    std::vector<Halfspace> rows;
    for (size_t e : pi) {
        IntVec normal(n, 0);
        normal[mp.coord_of(e)] = -1;
        rows.push_back({normal, 0});
    }

    // saturated chains whose interior lies in pi_prime and whose endpoints
    // do not; k = 0 recovers the plain cover relations
    auto emit = [&](size_t start, const std::vector<size_t>& interior, size_t end) {
        if (interior.empty() && mp.is_marked(start) && mp.is_marked(end)) return;
        IntVec normal(n, 0);
        Rat rhs = 0;
        for (size_t q : interior) normal[mp.coord_of(q)] += 1;
        if (mp.is_marked(start))
            rhs -= Rat(mp.marker(start));
        else
            normal[mp.coord_of(start)] += 1;
        if (mp.is_marked(end))
            rhs += Rat(mp.marker(end));
        else
            normal[mp.coord_of(end)] -= 1;
        rows.push_back({normal, rhs});
    };
    for (size_t start = 0; start < mp.elements().size(); ++start) {
        if (in_pi(start)) continue;
        std::vector<size_t> interior;
        auto dfs = [&](auto&& self, size_t at) -> void {
            for (size_t next : mp.upper_covers(at)) {
                if (in_pi(next)) {
                    interior.push_back(next);
                    self(self, next);
                    interior.pop_back();
                } else {
                    emit(start, interior, next);
                }
            }
        };
        dfs(dfs, start);
    }
    if (n == 0) return RationalPolytope::from_vertices(0, {RatVec{}});
    return RationalPolytope::from_halfspaces(n, rows);
}

RationalPolytope order_polytope(const MarkedPoset& mp) {
    return chain_order_polytope(mp, {});
}

RationalPolytope chain_polytope(const MarkedPoset& mp) {
    return chain_order_polytope(mp, all_unmarked_labels(mp));
}

RatVec transfer(const MarkedPoset& mp, const std::vector<std::string>& pi_prime,
                const RatVec& x) {
    if (x.size() != mp.unmarked().size())
        throw std::invalid_argument("transfer: dimension mismatch");
    RatVec out = x;
    for (size_t e : pi_prime_indices(mp, pi_prime)) {
        const Rat& here = x[mp.coord_of(e)];
        bool first = true;
        Rat best;
        for (size_t lo : mp.lower_covers(e)) {
            Rat cand = here - (mp.is_marked(lo) ? Rat(mp.marker(lo)) : x[mp.coord_of(lo)]);
            if (first || cand < best) best = cand;
            first = false;
        }
        out[mp.coord_of(e)] = best;
    }
    return out;
}

namespace {

std::vector<size_t> rank_raw(const MarkedPoset& mp) {
    size_t n = mp.elements().size();
    std::vector<size_t> r(n, 0), need(n);
    std::deque<size_t> ready;
    for (size_t e = 0; e < n; ++e)
        if ((need[e] = mp.lower_covers(e).size()) == 0) ready.push_back(e);
    while (!ready.empty()) {
        size_t e = ready.front();
        ready.pop_front();
        for (size_t f : mp.upper_covers(e)) {
            r[f] = std::max(r[f], r[e] + 1);
            if (--need[f] == 0) ready.push_back(f);
        }
    }
    return r;
}

}  // namespace

bool is_pure(const MarkedPoset& mp) {
    auto r = rank_raw(mp);
    for (const auto& [a, b] : mp.covers())
        if (r[b] != r[a] + 1) return false;
    size_t top = npos;
    for (size_t e = 0; e < mp.elements().size(); ++e) {
        if (!mp.upper_covers(e).empty()) continue;
        if (top == npos) top = r[e];
        if (r[e] != top) return false;
    }
    return true;
}

std::vector<size_t> rank(const MarkedPoset& mp) {
    if (!is_pure(mp)) throw AssumptionViolated("poset is not pure");
    return rank_raw(mp);
}

IntVec admissible_u(const MarkedPoset& mp) {
    auto r = rank(mp);
    size_t height = 0;
    for (size_t e = 0; e < mp.elements().size(); ++e) height = std::max(height, r[e]);

    std::map<size_t, Int> marked_value;
    for (size_t e = 0; e < mp.elements().size(); ++e) {
        if (!mp.is_marked(e)) continue;
        auto [it, fresh] = marked_value.emplace(r[e], mp.marker(e));
        if (!fresh && it->second != mp.marker(e))
            throw AssumptionViolated("markers disagree on rank " + std::to_string(r[e]));
    }

    std::vector<Int> by_rank(height + 1);
    for (size_t rr = 0; rr <= height; ++rr) {
        auto here = marked_value.find(rr);
        if (here != marked_value.end()) {
            by_rank[rr] = here->second;
        } else {
            auto next = marked_value.upper_bound(rr);
            // maximal elements are marked and share the top rank
            by_rank[rr] = std::min(Int(by_rank[rr - 1] + 1), next->second);
        }
    }

    IntVec u(mp.unmarked().size());
    for (size_t e : mp.unmarked()) u[mp.coord_of(e)] = by_rank[r[e]];
    if (!order_polytope(mp).contains(to_rat(u)))
        throw AssumptionViolated("no rank-constant point fits the marking");
    return u;
}

TransferFactorization transfer_factorization(const MarkedPoset& mp, const IntVec& u) {
    auto r = rank(mp);
    size_t n = mp.unmarked().size();
    if (u.size() != n) throw std::invalid_argument("factorization: dimension mismatch");

    std::map<size_t, Int> rank_value;
    for (size_t e : mp.unmarked()) {
        auto [it, fresh] = rank_value.emplace(r[e], u[mp.coord_of(e)]);
        if (!fresh && it->second != u[mp.coord_of(e)])
            throw AssumptionViolated("u is not constant on rank " + std::to_string(r[e]));
    }
    for (size_t e = 0; e < mp.elements().size(); ++e) {
        if (!mp.is_marked(e)) continue;
        auto it = rank_value.find(r[e]);
        if (it != rank_value.end() && it->second != mp.marker(e))
            throw AssumptionViolated("u misses the marker value on rank " + std::to_string(r[e]));
    }
    if (!order_polytope(mp).contains(to_rat(u)))
        throw AssumptionViolated("u lies outside the order polytope");

    std::vector<size_t> qs = mp.unmarked();
    std::sort(qs.begin(), qs.end(), [&](size_t a, size_t b) {
        if (r[a] != r[b]) return r[a] > r[b];
        return mp.elements()[a] < mp.elements()[b];
    });

    TransferFactorization out;
    out.trace.steps.push_back({negated(to_rat(u)), std::nullopt});
    out.expected.push_back(translate(order_polytope(mp), negated(to_rat(u))));

    std::vector<std::string> pi;
    for (size_t q : qs) {
        pi.push_back(mp.elements()[q]);
        out.order.push_back(mp.elements()[q]);

        IntVec w(n, 0);
        w[mp.coord_of(q)] = -1;
        std::vector<RatVec> fverts;
        bool marked_below = false;
        for (size_t lo : mp.lower_covers(q)) {
            if (mp.is_marked(lo)) {
                marked_below = true;
            } else {
                RatVec v(n, 0);
                v[mp.coord_of(lo)] = -1;
                fverts.push_back(std::move(v));
            }
        }
        if (marked_below) fverts.push_back(RatVec(n, 0));
        auto factor = RationalPolytope::from_vertices(n, fverts);
        out.trace.steps.push_back({std::nullopt, make_datum(w, std::move(factor))});

        RatVec shift_i = transfer(mp, pi, to_rat(u));
        out.expected.push_back(translate(chain_order_polytope(mp, pi), negated(shift_i)));
    }
    out.shift = transfer(mp, all_unmarked_labels(mp), to_rat(u));
    return out;
}

CounterexampleWitness counterexample_witness(const IntVec& lambda) {
    if (lambda.size() != 4) throw std::invalid_argument("counterexample: need four markers");
    const Int &l1 = lambda[0], &l2 = lambda[1], &l3 = lambda[2], &l4 = lambda[3];
    if (!(l1 <= l2 && l2 < l3 && l3 <= l4))
        throw std::invalid_argument("counterexample: need l1 <= l2 < l3 <= l4");

    MarkedPoset mp = MarkedPoset::create(
        {"l1", "l2", "l3", "l4", "x", "y", "z"},
        {{"l1", "z"},
         {"l1", "l2"},
         {"l1", "l3"},
         {"z", "x"},
         {"l2", "x"},
         {"z", "y"},
         {"l3", "y"},
         {"x", "l4"},
         {"y", "l4"}},
        {{"l1", l1}, {"l2", l2}, {"l3", l3}, {"l4", l4}});

    // regions by z: z >= l3, l2 <= z <= l3, z <= l2
    std::vector<IntMat> linear = {
        {{1, 0, 0}, {0, 1, 0}, {-1, -1, 1}},
        {{1, 0, 0}, {0, 1, 0}, {-1, 0, 1}},
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
    };
    std::vector<RatVec> constant = {
        {Rat(0), Rat(0), Rat(-l1)},
        {Rat(0), Rat(-l3), Rat(-l1)},
        {Rat(-l2), Rat(-l3), Rat(-l1)},
    };

    std::vector<std::string> all = {"x", "y", "z"};
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 6);
    bool match = true;
    for (int trial = 0; trial < 100 && match; ++trial) {
        RatVec p(3);
        for (auto& c : p) c = Rat(num(rng)) / den(rng);
        size_t branch = p[2] >= Rat(l3) ? 0 : (p[2] >= Rat(l2) ? 1 : 2);
        RatVec via = mul_vec_mat(p, linear[branch]);
        for (size_t j = 0; j < 3; ++j) via[j] += constant[branch][j];
        match = (via == transfer(mp, all, p));
    }

    // a common fixed origin would need t with t (L_i - L_j) = c_j - c_i
    RatMat sys(3, RatVec(9));
    RatVec rhs(9);
    size_t col = 0;
    for (auto [i, j] : {std::pair<size_t, size_t>{0, 1}, {0, 2}, {1, 2}}) {
        for (size_t c = 0; c < 3; ++c, ++col) {
            for (size_t rr = 0; rr < 3; ++rr)
                sys[rr][col] = Rat(linear[i][rr][c] - linear[j][rr][c]);
            rhs[col] = constant[j][c] - constant[i][c];
        }
    }
    bool inconsistent = !solve_left(sys, rhs).has_value();

    return {std::move(mp), std::move(linear), std::move(constant), match, inconsistent};
}

}  // namespace polymut
