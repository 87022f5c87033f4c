#include "polymut/lie.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace polymut {

namespace {

IntMat blank_cartan(size_t n) {
    IntMat c(n, IntVec(n, 0));
    for (size_t i = 0; i < n; ++i) c[i][i] = 2;
    return c;
}

void single_edge(IntMat& c, size_t u, size_t v) {
    c[u][v] = -1;
    c[v][u] = -1;
}

// chain 5-4-3-2-6-7-8 as far as the rank allows, node 1 on node 3
IntMat e_cartan(size_t n) {
    IntMat c = blank_cartan(n);
    single_edge(c, 4, 3);
    single_edge(c, 3, 2);
    single_edge(c, 2, 1);
    single_edge(c, 1, 5);
    single_edge(c, 2, 0);
    if (n >= 7) single_edge(c, 5, 6);
    if (n >= 8) single_edge(c, 6, 7);
    return c;
}

void check_weight(const CartanDatum& cd, const IntVec& lam) {
    if (lam.size() != cd.rank) throw std::invalid_argument("weight has wrong length");
}

void check_dominant(const IntVec& lam, size_t n) {
    if (lam.size() != n) throw std::invalid_argument("weight has wrong length");
    for (const Int& x : lam)
        if (x < 0) throw std::invalid_argument("weight is not dominant");
}

IntVec unit(size_t m, size_t i) {
    IntVec v(m, 0);
    v[i] = 1;
    return v;
}

std::string lbl(const char* stem, size_t i, size_t j) {
    return std::string(stem) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::string lbl(const char* stem, size_t i) {
    return std::string(stem) + "(" + std::to_string(i) + ")";
}

}  // namespace

CartanDatum cartan(CartanType type, size_t n) {
    switch (type) {
        case CartanType::A: {
            if (n < 1) throw std::invalid_argument("type A needs rank >= 1");
            IntMat c = blank_cartan(n);
            for (size_t i = 0; i + 1 < n; ++i) single_edge(c, i, i + 1);
            return {type, n, std::move(c)};
        }
        case CartanType::C: {
            if (n < 2) throw std::invalid_argument("type C needs rank >= 2");
            IntMat c = blank_cartan(n);
            for (size_t i = 1; i + 1 < n; ++i) single_edge(c, i, i + 1);
            c[0][1] = -1;  // <alpha_2, h_1>
            c[1][0] = -2;  // <alpha_1, h_2>
            return {type, n, std::move(c)};
        }
        case CartanType::D: {
            if (n < 3) throw std::invalid_argument("type D needs rank >= 3");
            IntMat c = blank_cartan(n);
            single_edge(c, 0, 2);
            single_edge(c, 1, 2);
            for (size_t i = 2; i + 1 < n; ++i) single_edge(c, i, i + 1);
            return {type, n, std::move(c)};
        }
        case CartanType::E6:
            return {type, 6, e_cartan(6)};
        case CartanType::E7:
            return {type, 7, e_cartan(7)};
        case CartanType::E8:
            return {type, 8, e_cartan(8)};
    }
    throw std::invalid_argument("unknown Cartan type");
}

IntVec simple_reflect(const CartanDatum& cd, size_t i, const IntVec& lam) {
    check_weight(cd, lam);
    if (i >= cd.rank) throw std::invalid_argument("reflection index out of range");
    IntVec out = lam;
    for (size_t j = 0; j < cd.rank; ++j) out[j] -= lam[i] * cd.c[j][i];
    return out;
}

std::vector<size_t> standard_word(CartanType type, size_t n) {
    std::vector<size_t> w;  // 1-based letters, shifted at the end
    switch (type) {
        case CartanType::A:
            if (n < 1) throw std::invalid_argument("type A needs rank >= 1");
            for (size_t k = 1; k <= n; ++k)
                for (size_t j = k; j >= 1; --j) w.push_back(j);
            break;
        case CartanType::C:
            if (n < 2) throw std::invalid_argument("type C needs rank >= 2");
            w.push_back(1);
            for (size_t k = 2; k <= n; ++k) {
                for (size_t j = k; j >= 1; --j) w.push_back(j);
                for (size_t j = 2; j <= k; ++j) w.push_back(j);
            }
            break;
        case CartanType::D:
            if (n < 3) throw std::invalid_argument("type D needs rank >= 3");
            w = {1, 2};
            for (size_t k = 3; k <= n; ++k) {
                for (size_t j = k; j >= 3; --j) w.push_back(j);
                w.push_back(1);
                w.push_back(2);
                for (size_t j = 3; j <= k; ++j) w.push_back(j);
            }
            break;
        case CartanType::E6:
        case CartanType::E7:
        case CartanType::E8: {
            w = standard_word(CartanType::D, 5);
            for (size_t& x : w) ++x;  // undo the shift below once
            std::vector<size_t> e6 = {6, 2, 3, 1, 4, 5, 3, 4, 2, 3, 1, 6, 2, 3, 4, 5};
            w.insert(w.end(), e6.begin(), e6.end());
            if (type != CartanType::E6) {
                std::vector<size_t> e7 = {7, 6, 2, 3, 1, 4, 5, 3, 4, 2, 3, 1, 6,
                                          2, 3, 4, 5, 7, 6, 2, 3, 1, 4, 3, 2, 6, 7};
                w.insert(w.end(), e7.begin(), e7.end());
            }
            if (type == CartanType::E8) {
                std::vector<size_t> e8 = {8, 7, 6, 2, 3, 1, 4, 5, 3, 4, 2, 3, 1, 6, 2,
                                          3, 4, 5, 7, 6, 2, 3, 1, 4, 3, 2, 6, 7, 8, 7,
                                          6, 2, 3, 1, 4, 5, 3, 4, 2, 3, 1, 6, 2, 3, 4,
                                          5, 7, 6, 2, 3, 1, 4, 3, 2, 6, 7, 8};
                w.insert(w.end(), e8.begin(), e8.end());
            }
            break;
        }
    }
    for (size_t& x : w) --x;
    return w;
}

std::vector<size_t> word_kplus(const std::vector<size_t>& word) {
    size_t m = word.size();
    std::vector<size_t> kp(m, m);
    for (size_t k = 0; k < m; ++k)
        for (size_t j = k + 1; j < m; ++j)
            if (word[j] == word[k]) {
                kp[k] = j;
                break;
            }
    return kp;
}

std::vector<size_t> frozen_indices(const std::vector<size_t>& word) {
    auto kp = word_kplus(word);
    std::vector<size_t> out;
    for (size_t k = 0; k < word.size(); ++k)
        if (kp[k] == word.size()) out.push_back(k);
    return out;
}

Seed exchange_from_word(const CartanDatum& cd, const std::vector<size_t>& word) {
    size_t m = word.size();
    for (size_t x : word)
        if (x >= cd.rank) throw std::invalid_argument("word letter out of range");
    auto kp = word_kplus(word);
    std::vector<size_t> unfrozen;
    for (size_t k = 0; k < m; ++k)
        if (kp[k] < m) unfrozen.push_back(k);

    IntMat eps(unfrozen.size(), IntVec(m, 0));
    for (size_t r = 0; r < unfrozen.size(); ++r) {
        size_t s = unfrozen[r];
        for (size_t t = 0; t < m; ++t) {
            if (kp[s] == t)
                eps[r][t] = 1;
            else if (t < m && kp[t] == s)
                eps[r][t] = -1;
            else if (s < t && t < kp[s] && kp[s] < kp[t])
                eps[r][t] = cd.c[word[t]][word[s]];
            else if (t < s && s < kp[t] && kp[t] < kp[s])
                eps[r][t] = -cd.c[word[t]][word[s]];
        }
    }
    return make_seed(std::move(eps), std::move(unfrozen));
}

IntMat m_matrix(const CartanDatum& cd, const std::vector<size_t>& word) {
    size_t m = word.size();
    for (size_t x : word)
        if (x >= cd.rank) throw std::invalid_argument("word letter out of range");
    IntMat d(m, IntVec(m, 0));
    for (size_t s = 0; s < m; ++s) {
        IntVec mu = unit(cd.rank, word[s]);
        d[s][s] = 1;
        for (size_t t = s; t-- > 0;) {
            mu = simple_reflect(cd, word[t + 1], mu);
            d[s][t] = mu[word[t]];
        }
    }
    return d;
}

IntVec string_interior_point(const CartanDatum& cd, const std::vector<size_t>& word) {
    IntMat d = m_matrix(cd, word);
    IntVec a(word.size(), 0);
    for (size_t k : frozen_indices(word))
        for (size_t j = 0; j <= k; ++j) a[j] += d[k][j];
    return a;
}

namespace {

// row-major position of a(i,j) in the type-A triangle, rows 1..n of
// lengths n+1-i
size_t gt_a_index(size_t n, size_t i, size_t j) {
    return (i - 1) * n - (i - 1) * (i - 2) / 2 + (j - 1);
}

Int lam_geq(const IntVec& lam, size_t k) {
    Int s = 0;
    for (size_t l = k; l <= lam.size(); ++l) s += lam[l - 1];
    return s;
}

Int lam_leq(const IntVec& lam, size_t k) {
    Int s = 0;
    for (size_t l = 1; l <= k; ++l) s += lam[l - 1];
    return s;
}

// anti-diagonal coordinate order of the symplectic triangle: block k lists
// b(k+1-t, t) for t = 1..k-1, then a(t, k+1-t) for t = 1..k
struct SymplecticLayout {
    std::map<std::pair<size_t, size_t>, size_t> a, b;
    size_t total = 0;

    explicit SymplecticLayout(size_t n) {
        for (size_t k = 1; k <= n; ++k) {
            for (size_t t = 1; t + 1 <= k; ++t) b[{k + 1 - t, t}] = total++;
            for (size_t t = 1; t <= k; ++t) a[{t, k + 1 - t}] = total++;
        }
    }
};

}  // namespace

RationalPolytope gt_polytope_A(size_t n, const IntVec& lam) {
    check_dominant(lam, n);
    size_t m = n * (n + 1) / 2;
    std::vector<Halfspace> hs;
    for (size_t i = 1; i <= n; ++i) {
        for (size_t j = 1; j + i <= n + 1; ++j) {
            size_t here = gt_a_index(n, i, j);
            if (i == 1) {
                IntVec up = unit(m, here);
                hs.push_back({up, Rat(lam_geq(lam, j))});
                IntVec down(m, 0);
                down[here] = -1;
                hs.push_back({down, Rat(-lam_geq(lam, j + 1))});
            } else {
                IntVec up(m, 0);
                up[here] = 1;
                up[gt_a_index(n, i - 1, j)] = -1;
                hs.push_back({std::move(up), 0});
                IntVec down(m, 0);
                down[here] = -1;
                down[gt_a_index(n, i - 1, j + 1)] = 1;
                hs.push_back({std::move(down), 0});
            }
        }
    }
    return RationalPolytope::from_halfspaces(m, std::move(hs));
}

RationalPolytope gt_polytope_C(size_t n, const IntVec& lam) {
    check_dominant(lam, n);
    SymplecticLayout ly(n);
    size_t m = ly.total;
    std::vector<Halfspace> hs;
    auto pair_le = [&](size_t lo, size_t hi) {
        IntVec v(m, 0);
        v[lo] = 1;
        v[hi] = -1;
        hs.push_back({std::move(v), 0});
    };
    for (size_t j = 1; j <= n; ++j) {
        size_t here = ly.a.at({1, j});
        IntVec up = unit(m, here);
        hs.push_back({up, Rat(lam_leq(lam, n + 1 - j))});
        IntVec down(m, 0);
        down[here] = -1;
        hs.push_back({down, Rat(-lam_leq(lam, n - j))});
    }
    for (size_t k = 2; k <= n; ++k) {
        for (size_t j = 1; j + k <= n + 1; ++j) {
            pair_le(ly.b.at({k, j}), ly.a.at({k - 1, j}));
            pair_le(ly.a.at({k - 1, j + 1}), ly.b.at({k, j}));
            pair_le(ly.a.at({k, j}), ly.b.at({k, j}));
            if (j + k <= n) {
                pair_le(ly.b.at({k, j + 1}), ly.a.at({k, j}));
            } else {
                IntVec down(m, 0);
                down[ly.a.at({k, j})] = -1;
                hs.push_back({std::move(down), 0});
            }
        }
    }
    return RationalPolytope::from_halfspaces(m, std::move(hs));
}

MarkedPoset gt_marked_poset(CartanType type, size_t n, const IntVec& lam) {
    if (type == CartanType::A) {
        check_dominant(lam, n);
        std::vector<std::string> elems;
        std::map<std::string, Int> marking;
        for (size_t j = 1; j <= n + 1; ++j) {
            elems.push_back(lbl("m", j));
            marking[lbl("m", j)] = lam_geq(lam, j);
        }
        for (size_t i = 1; i <= n; ++i)
            for (size_t j = 1; j + i <= n + 1; ++j) elems.push_back(lbl("a", i, j));
        std::vector<std::pair<std::string, std::string>> covers;
        for (size_t i = 1; i <= n; ++i) {
            for (size_t j = 1; j + i <= n + 1; ++j) {
                std::string here = lbl("a", i, j);
                std::string above = i == 1 ? lbl("m", j) : lbl("a", i - 1, j);
                std::string below = i == 1 ? lbl("m", j + 1) : lbl("a", i - 1, j + 1);
                covers.push_back({here, above});
                covers.push_back({below, here});
            }
        }
        return MarkedPoset::create(elems, covers, marking);
    }
    if (type != CartanType::C) throw std::invalid_argument("marked posets exist for types A and C");

    check_dominant(lam, n);
    SymplecticLayout ly(n);
    std::vector<std::string> elems;
    std::map<std::string, Int> marking;
    for (size_t k = 0; k <= n; ++k) {
        elems.push_back(lbl("m", k));
        marking[lbl("m", k)] = lam_leq(lam, k);
    }
    for (size_t k = 2; k <= n; ++k) {
        elems.push_back(lbl("z", k));
        marking[lbl("z", k)] = 0;
    }
    {
        // creation order of unmarked elements = coordinate order
        std::vector<std::string> by_coord(ly.total);
        for (const auto& [kj, pos] : ly.a) by_coord[pos] = lbl("a", kj.first, kj.second);
        for (const auto& [kj, pos] : ly.b) by_coord[pos] = lbl("b", kj.first, kj.second);
        elems.insert(elems.end(), by_coord.begin(), by_coord.end());
    }
    std::vector<std::pair<std::string, std::string>> covers;
    for (size_t j = 1; j <= n; ++j) {
        covers.push_back({lbl("a", 1, j), lbl("m", n + 1 - j)});
        covers.push_back({lbl("m", n - j), lbl("a", 1, j)});
    }
    for (size_t k = 2; k <= n; ++k) {
        for (size_t j = 1; j + k <= n + 1; ++j) {
            covers.push_back({lbl("b", k, j), lbl("a", k - 1, j)});
            covers.push_back({lbl("a", k - 1, j + 1), lbl("b", k, j)});
            covers.push_back({lbl("a", k, j), lbl("b", k, j)});
            if (j + k <= n)
                covers.push_back({lbl("b", k, j + 1), lbl("a", k, j)});
            else
                covers.push_back({lbl("z", k), lbl("a", k, j)});
        }
    }
    return MarkedPoset::create(elems, covers, marking);
}

RationalPolytope fflv_A(size_t n, const IntVec& lam) {
    return chain_polytope(gt_marked_poset(CartanType::A, n, lam));
}

RationalPolytope fflv_C(size_t n, const IntVec& lam) {
    return chain_polytope(gt_marked_poset(CartanType::C, n, lam));
}

RationalPolytope sl4_no_body(const IntVec& lam) {
    check_dominant(lam, 3);
    const Int &l1 = lam[0], &l2 = lam[1], &l3 = lam[2];
    std::vector<Halfspace> hs = {
        {{0, 0, 0, 0, 0, -1}, 0},  {{0, 0, 0, 0, 0, 1}, Rat(l1)},
        {{0, 0, 0, 0, -1, 0}, 0},  {{0, 0, 0, 0, 1, 0}, Rat(l2)},
        {{0, 0, 0, -1, 0, 0}, 0},  {{0, 0, 0, 1, 0, 0}, Rat(l3)},
        {{0, 0, -1, 0, -1, 0}, 0}, {{0, 0, 1, 0, 0, 1}, Rat(l1)},
        {{0, -1, 0, -1, 0, 0}, 0}, {{0, 1, 0, 0, 1, 0}, Rat(l2)},
        {{-1, -1, 0, -1, 0, 0}, 0}, {{1, 0, 1, 0, 0, 1}, Rat(l1)},
    };
    return RationalPolytope::from_halfspaces(6, std::move(hs));
}

RationalPolytope nz_sp4(const IntVec& lam) {
    check_dominant(lam, 2);
    const Int &l1 = lam[0], &l2 = lam[1];
    std::vector<Halfspace> hs = {
        {{-1, 0, 0, 0}, 0},  {{0, -1, 0, 0}, 0},  {{0, 0, -1, 0}, 0},
        {{0, 0, 0, -1}, 0},  {{0, 0, 0, 1}, Rat(l2)}, {{0, 0, 1, -1}, Rat(l1)},
        {{0, 1, -1, 0}, Rat(l1)}, {{0, 1, -2, 0}, 0}, {{1, 0, 0, 0}, Rat(l1)},
        {{2, -1, 0, 0}, 0},
    };
    return RationalPolytope::from_halfspaces(4, std::move(hs));
}

}  // namespace polymut
