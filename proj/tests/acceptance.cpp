// Acceptance run: one line per criterion, exit code = number of failures.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "polymut/cluster.hpp"
#include "polymut/lie.hpp"
#include "polymut/mutation.hpp"
#include "polymut/poset.hpp"

using namespace polymut;

namespace {

struct Failure {
    std::string msg;
};

void require(bool ok, const std::string& msg) {
    if (!ok) throw Failure{msg};
}

RationalPolytope from_int_vertices(size_t ambient, const std::vector<IntVec>& pts) {
    std::vector<RatVec> q;
    for (const auto& p : pts) q.push_back(to_rat(p));
    return RationalPolytope::from_vertices(ambient, q);
}

RatVec random_rat_vec(std::mt19937_64& rng, size_t dim) {
    std::uniform_int_distribution<int> num(-30, 30), den(1, 7);
    RatVec v(dim);
    for (auto& c : v) c = Rat(num(rng)) / den(rng);
    return v;
}

Seed sl4_seed() {
    return exchange_from_word(cartan(CartanType::A, 3), standard_word(CartanType::A, 3));
}

// ---------------------------------------------------------------------------

void criterion_1(std::vector<std::string>&) {
    RationalPolytope p = from_int_vertices(2, {{1, 1}, {0, 1}, {-1, -1}, {0, -1}});
    MutationDatum d = make_datum({0, -1}, from_int_vertices(2, {{0, 0}, {1, 0}}));

    auto mres = mutate(d, p);
    require(std::holds_alternative<RationalPolytope>(mres), "mutation not well defined");
    RationalPolytope mut = std::get<RationalPolytope>(mres);
    require(mut == from_int_vertices(2, {{0, 1}, {-1, -1}, {1, -1}}), "mutated vertices differ");

    auto g = g_slice(d, p, Int(-1));
    require(g && *g == from_int_vertices(2, {{0, 1}}), "level -1 lattice slice differs");

    RationalPolytope pd = polar(p);
    require(pd == from_int_vertices(2, {{0, -1}, {2, -1}, {0, 1}, {-2, 1}}), "dual differs");

    auto img = phi_polytope(d, pd);
    require(std::holds_alternative<RationalPolytope>(img), "phi image not convex");
    require(std::get<RationalPolytope>(img) == polar(mut), "phi(dual) != dual of mutation");
    require(duality_holds(d, p), "duality check failed");
}

void criterion_2(std::vector<std::string>&) {
    Seed s = make_seed({{0, -1, 1, 0, 0, 0}, {1, 0, -1, -1, 1, 0}, {-1, 1, 0, 0, -1, 1}},
                       {0, 1, 2});
    IntMat mu2 = {{0, 1, 0, -1, 0, 0}, {-1, 0, 1, 1, -1, 0}, {0, -1, 0, 0, 0, 1}};
    require(mutate_matrix(s, 1).eps == mu2, "matrix mutation in direction 2 differs");
    for (size_t k : s.unfrozen)
        require(mutate_matrix(mutate_matrix(s, k), k) == s, "matrix mutation not an involution");

    RatVec g = {0, 1, 0, 0, 0, 0};
    RatVec expect = {1, -1, 0, 0, 1, 0};
    require(tropical_mutate_point(s, 1, g) == expect, "tropical image of e_2 differs");
}

void criterion_3(std::vector<std::string>& notes) {
    Seed root = sl4_seed();
    std::vector<Seed> seen = {root};
    std::vector<std::pair<Seed, size_t>> frontier = {{root, root.vars()}};
    for (int depth = 0; depth < 3; ++depth) {
        std::vector<std::pair<Seed, size_t>> next;
        for (const auto& [s, last] : frontier)
            for (size_t k : s.unfrozen) {
                if (k == last) continue;
                Seed t = mutate_matrix(s, k);
                if (std::find(seen.begin(), seen.end(), t) == seen.end()) seen.push_back(t);
                next.emplace_back(std::move(t), k);
            }
        frontier = std::move(next);
    }

    std::mt19937_64 rng(2026);
    size_t evaluated = 0;
    for (const Seed& s : seen)
        for (size_t k : s.unfrozen) {
            TropicalStep st = decompose_tropical(s, k);
            require(is_unimodular(st.linear), "linear factor not unimodular");
            RatVec w = to_rat(st.piecewise.w);
            for (const RatVec& v : st.piecewise.factor.vertices())
                require(dot(w, v) == 0, "factor leaves the w-perp hyperplane");
            for (int t = 0; t < 1000; ++t) {
                RatVec g = random_rat_vec(rng, s.vars());
                RatVec lhs = mul_vec_mat(phi_point(st.piecewise, g), st.linear);
                require(lhs == tropical_mutate_point(s, k, g), "factorization identity broken");
                ++evaluated;
            }
        }
    std::ostringstream os;
    os << "criterion 3: " << seen.size() << " seeds x 3 directions x 1000 points ("
       << evaluated << " evaluations)";
    notes.push_back(os.str());
}

IntVec table_a(size_t n) {
    IntVec a;
    for (size_t row = 1; row <= n; ++row)
        for (size_t v = row; v >= 1; --v) a.push_back(Int(v));
    return a;
}

IntVec table_d(size_t n) {
    IntVec a = {1, 1};
    for (size_t k = 3; k <= n; ++k) {
        for (size_t v = 2 * k - 3; v >= k - 1; --v) a.push_back(Int(v));
        for (size_t v = k - 1; v >= 1; --v) a.push_back(Int(v));
    }
    return a;
}

IntVec append_ints(IntVec base, std::initializer_list<int> tail) {
    for (int v : tail) base.push_back(Int(v));
    return base;
}

void criterion_4(std::vector<std::string>& notes) {
    auto computed = [](CartanType t, size_t n) {
        return string_interior_point(cartan(t, n), standard_word(t, n));
    };
    for (size_t n = 1; n <= 8; ++n)
        require(computed(CartanType::A, n) == table_a(n), "type A table mismatch");
    for (size_t n = 3; n <= 6; ++n)
        require(computed(CartanType::D, n) == table_d(n), "type D table mismatch");

    IntVec e6 = append_ints(table_d(5),
                            {11, 10, 9, 8, 8, 7, 7, 6, 6, 5, 4, 5, 4, 3, 2, 1});
    require(computed(CartanType::E6, 0) == e6, "E6 table mismatch");
    IntVec e7 = append_ints(e6, {17, 16, 15, 14, 13, 13, 12, 12, 11, 11, 10, 9, 10,
                                 9, 8, 7, 6, 9, 8, 7, 6, 5, 5, 4, 3, 2, 1});
    require(computed(CartanType::E7, 0) == e7, "E7 table mismatch");

    IntVec e8 = append_ints(
        e7, {28, 27, 26, 25, 24, 23, 23, 22, 22, 21, 21, 20, 19, 20, 19, 18, 17, 16, 19,
             18, 17, 16, 15, 15, 14, 13, 12, 11, 29, 18, 17, 16, 15, 14, 14, 13, 13, 12,
             12, 11, 10, 11, 10, 9,  8,  7,  10, 9,  8,  7,  6,  6,  5,  4,  3,  2,  1});
    IntVec got = computed(CartanType::E8, 0);
    require(got.size() == e8.size(), "E8 table has wrong length");
    std::vector<size_t> off;
    for (size_t i = 0; i < e8.size(); ++i)
        if (got[i] != e8[i]) off.push_back(i);
    if (off.empty()) {
        notes.push_back(
            "criterion 4: the E8 table matches the formula at every entry, including the "
            "value 29 at position 92; no discrepancy to document");
    } else if (off.size() == 1 && off[0] == 91) {
        std::ostringstream os;
        os << "criterion 4: documented discrepancy at E8 entry 92: table 29, formula "
           << got[91];
        notes.push_back(os.str());
    } else {
        throw Failure{"E8 table mismatch beyond the flagged entry"};
    }
}

void criterion_5(std::vector<std::string>&) {
    struct Case {
        RationalPolytope p;
        std::vector<IntVec> pinned;  // empty = only uniqueness is pinned
        const char* name;
    };
    std::vector<Case> cases;
    cases.push_back({gt_polytope_A(1, {2}), {}, "sl2 interlacing polytope"});
    cases.push_back({gt_polytope_A(2, {2, 2}), {{3, 1, 2}}, "sl3 interlacing polytope"});
    cases.push_back({gt_polytope_A(3, {2, 2, 2}), {}, "sl4 interlacing polytope"});
    cases.push_back({sl4_no_body({2, 2, 2}), {{0, 0, 0, 1, 1, 1}}, "sl4 valuation body"});
    for (const Case& c : cases) {
        auto interior = interior_lattice_points(c.p);
        require(interior.size() == 1, std::string(c.name) + ": interior point not unique");
        if (!c.pinned.empty())
            require(interior == c.pinned, std::string(c.name) + ": interior point differs");
        require(dual_at(c.p, to_rat(interior[0])).is_lattice(),
                std::string(c.name) + ": dual has a non-integral vertex");
    }
}

void criterion_6(std::vector<std::string>& notes) {
    RatVec u = {0, 0, 0, 1, 1, 1};
    IntVec pinned = {0, 0, 0, 1, 1, 1};
    IntVec zero(6, 0);

    struct Node {
        SeedGraphNode sgn;
        RationalPolytope dual;
    };
    auto check_node = [&](const SeedGraphNode& sgn) {
        auto interior = interior_lattice_points(sgn.payload);
        require(interior.size() == 1 && interior[0] == pinned,
                "payload interior point moved");
        RationalPolytope d = dual_at(sgn.payload, u);
        require(d.is_lattice(), "payload dual not a lattice polytope");
        return Node{sgn, std::move(d)};
    };

    Node root = check_node({sl4_seed(), sl4_no_body({2, 2, 2}), {}});
    std::vector<Int> base_counts = ehrhart_counts(root.sgn.payload, 2);
    std::vector<RationalPolytope> counted = {root.sgn.payload};

    std::vector<std::vector<Int>> dual_count_pairs = {ehrhart_counts(root.dual, 2)};

    std::vector<Node> frontier;
    frontier.push_back(std::move(root));
    size_t visited = 1, edges = 0;
    for (int depth = 0; depth < 3; ++depth) {
        std::vector<Node> next;
        for (const Node& par : frontier) {
            size_t last = par.sgn.path.empty() ? par.sgn.seed.vars() : par.sgn.path.back();
            for (size_t k : par.sgn.seed.unfrozen) {
                if (k == last) continue;
                Node child = check_node(tropical_mutate_polytope(par.sgn, k));
                ++visited;

                // the dual moves by the matching vertex-side mutation
                TropicalStep st = decompose_tropical(par.sgn.seed, k);
                auto mres = mutate(st.piecewise, par.dual);
                require(std::holds_alternative<RationalPolytope>(mres),
                        "dual mutation not well defined along an edge");
                require(std::get<RationalPolytope>(mres) ==
                            apply_affine(child.dual, transpose(st.linear), zero),
                        "dual mutation does not match the child dual");
                ++edges;

                bool fresh = std::find(counted.begin(), counted.end(), child.sgn.payload) ==
                             counted.end();
                if (fresh) {
                    require(ehrhart_counts(child.sgn.payload, 2) == base_counts,
                            "payload dilation counts moved");
                    counted.push_back(child.sgn.payload);
                }
                std::vector<Int> dc = ehrhart_counts(child.dual, 2);
                if (std::find(dual_count_pairs.begin(), dual_count_pairs.end(), dc) ==
                    dual_count_pairs.end())
                    dual_count_pairs.push_back(std::move(dc));
                next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }

    std::ostringstream os;
    os << "criterion 6: " << visited << " nodes, " << edges << " certified edges, "
       << counted.size() << " distinct payloads, dilation counts " << base_counts[0] << "/"
       << base_counts[1] << " everywhere";
    notes.push_back(os.str());

    std::sort(dual_count_pairs.begin(), dual_count_pairs.end());
    std::ostringstream ds;
    ds << "criterion 6: documented discrepancy: the duals' own dilation counts vary along "
          "mutation (";
    for (size_t i = 0; i < dual_count_pairs.size(); ++i)
        ds << (i ? ", " : "") << dual_count_pairs[i][0] << "/" << dual_count_pairs[i][1];
    ds << "); mutation preserves the counts of the polytope dual to the mutated one, here "
          "the payload, and those stay constant as checked";
    notes.push_back(ds.str());
}

void run_transfer(CartanType type, size_t n, const IntVec& lam,
                  const RationalPolytope& endpoint_body, const Int& expected_count) {
    MarkedPoset mp = gt_marked_poset(type, n, lam);
    RationalPolytope order = order_polytope(mp);
    IntVec u = admissible_u(mp);
    TransferFactorization tf = transfer_factorization(mp, u);
    require(tf.trace.steps.size() == tf.expected.size(), "trace and images disagree in length");

    RationalPolytope cur = order;
    for (size_t i = 0; i < tf.trace.steps.size(); ++i) {
        const TraceStep& st = tf.trace.steps[i];
        if (st.translate) cur = translate(cur, *st.translate);
        if (st.map) {
            auto img = phi_polytope(*st.map, cur);
            require(std::holds_alternative<RationalPolytope>(img),
                    "intermediate image not convex");
            cur = std::get<RationalPolytope>(img);
        }
        require(cur == tf.expected[i], "intermediate image differs from the factorization");
        RatVec v0 = cur.vertices()[0];
        RatVec back(v0.size());
        for (size_t j = 0; j < v0.size(); ++j) back[j] = -v0[j];
        require(translate(cur, back).is_lattice(),
                "intermediate is not a translated lattice polytope");
    }

    RatVec minus_shift(tf.shift.size());
    for (size_t j = 0; j < tf.shift.size(); ++j) minus_shift[j] = -tf.shift[j];
    require(cur == translate(endpoint_body, minus_shift),
            "endpoint is not the chain polytope shifted back");

    require(Int(lattice_points(order).size()) == expected_count, "order-side count differs");
    require(Int(lattice_points(endpoint_body).size()) == expected_count,
            "chain-side count differs");
}

void criterion_7(std::vector<std::string>&) {
    CartanDatum a2 = cartan(CartanType::A, 2), a3 = cartan(CartanType::A, 3);
    Int d2 = oracles::weyl_dim(a2, {2, 2});
    require(d2 == 27, "representation dimension oracle disagrees with 27");
    run_transfer(CartanType::A, 2, {2, 2}, fflv_A(2, {2, 2}), d2);
    run_transfer(CartanType::A, 3, {2, 2, 2}, fflv_A(3, {2, 2, 2}),
                 oracles::weyl_dim(a3, {2, 2, 2}));
}

void criterion_8(std::vector<std::string>& notes) {
    CartanDatum c2 = cartan(CartanType::C, 2);
    run_transfer(CartanType::C, 2, {2, 2}, fflv_C(2, {2, 2}), oracles::weyl_dim(c2, {2, 2}));

    size_t nz = nz_sp4({2, 2}).vertices().size();
    size_t gt = gt_polytope_C(2, {2, 2}).vertices().size();
    require(nz == 11, "crystal polytope vertex count differs");
    require(gt == 12, "interlacing polytope vertex count differs");
    std::ostringstream os;
    os << "criterion 8: vertex counts " << nz << " vs " << gt
       << " certify the two sp4 polytopes inequivalent";
    notes.push_back(os.str());
}

void criterion_9(std::vector<std::string>&) {
    CounterexampleWitness w = counterexample_witness({0, 1, 2, 3});
    require(w.branches_match_transfer, "witness branch formulas rejected");
    require(w.no_common_fixed_point, "fixed-origin system unexpectedly solvable");

    std::vector<std::string> all = {"x", "y", "z"};
    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
        RatVec p = random_rat_vec(rng, 3);
        size_t b = p[2] >= 2 ? 0 : (p[2] >= 1 ? 1 : 2);
        RatVec via = mul_vec_mat(p, w.branch_linear[b]);
        for (size_t j = 0; j < 3; ++j) via[j] += w.branch_constant[b][j];
        require(via == transfer(w.poset, all, p), "branch formula disagrees with transfer");
    }
}

void criterion_10(std::vector<std::string>& notes) {
    CartanDatum cd = cartan(CartanType::A, 3);
    IntMat m = m_matrix(cd, standard_word(CartanType::A, 3));
    IntVec zero(6, 0);
    RationalPolytope q = apply_affine(sl4_no_body({2, 2, 2}), m, zero);
    RationalPolytope gt = gt_polytope_A(3, {2, 2, 2});

    EquivalenceResult eq = affine_unimodular_equivalent(q, gt);
    if (eq.inconclusive) throw Failure{"equivalence search ran out of frame budget"};
    require(eq.equivalent(), "polytopes reported inequivalent");
    const auto& [cm, ct] = *eq.certificate;
    require(apply_affine(q, cm, ct) == gt, "certificate fails to map one onto the other");
    notes.push_back("criterion 10: certificate re-verified by applying it vertex by vertex");
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* label;
        std::function<void(std::vector<std::string>&)> run;
    };
    const std::vector<Entry> entries = {
        {1, "worked 2d mutation example, dual and phi images bit-exact", criterion_1},
        {2, "sl4 exchange-matrix and tropical mutation fixtures", criterion_2},
        {3, "tropical maps factor as mutation then unimodular map", criterion_3},
        {4, "string interior-point tables for A, D, E", criterion_4},
        {5, "unique interior point and integral dual at 2rho", criterion_5},
        {6, "depth-3 exchange walk keeps interior point, lattice duals, counts", criterion_6},
        {7, "type A transfer maps factor through mutations", criterion_7},
        {8, "type C transfer factorization and sp4 inequivalence", criterion_8},
        {9, "piecewise transfer with no common fixed origin", criterion_9},
        {10, "valuation body is unimodularly the interlacing polytope", criterion_10},
    };

    int failed = 0;
    for (const Entry& e : entries) {
        std::vector<std::string> notes;
        auto start = std::chrono::steady_clock::now();
        std::string verdict = "pass", detail;
        try {
            e.run(notes);
        } catch (const Failure& f) {
            verdict = "FAIL";
            detail = f.msg;
            ++failed;
        } catch (const std::exception& ex) {
            verdict = "FAIL";
            detail = ex.what();
            ++failed;
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cout << "criterion " << e.id << ": " << verdict << "  " << e.label << "  [" << ms
                  << " ms]";
        if (!detail.empty()) std::cout << "  <" << detail << ">";
        std::cout << "\n";
        for (const std::string& n : notes) std::cout << "  note: " << n << "\n";
    }
    if (failed == 0)
        std::cout << "all 10 criteria passed\n";
    else
        std::cout << failed << " criteria failed\n";
    return failed;
}
