#pragma once

// Independent cross-checks used only by the test suites. Everything here is
// derived from first principles (root-system closure, brute-force counting)
// rather than from the library's own polytope machinery.

#include <set>
#include <stdexcept>
#include <vector>

#include "polymut/lie.hpp"
#include "polymut/rational.hpp"

namespace polymut::oracles {

// Positive roots of the root system with Cartan matrix a (c_{i,j} = <alpha_j,
// h_i>), as coefficient vectors over the simple roots. Height-by-height
// closure using root strings: beta + alpha_i is a root iff
// p - <beta, h_i> > 0 where p = max{k : beta - k alpha_i is a root}.
inline std::vector<IntVec> positive_roots_of(const IntMat& a) {
    size_t n = a.size();
    std::set<IntVec> roots;
    std::vector<IntVec> frontier;
    for (size_t i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        roots.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<IntVec> next;
        for (const IntVec& beta : frontier) {
            for (size_t i = 0; i < n; ++i) {
                Int pairing = 0;
                for (size_t j = 0; j < n; ++j) pairing += a[i][j] * beta[j];
                Int p = 0;
                IntVec down = beta;
                while (true) {
                    down[i] -= 1;
                    bool neg = true;
                    for (const Int& x : down) neg = neg && x >= 0;
                    if (!neg || !roots.count(down)) break;
                    p += 1;
                }
                if (p - pairing > 0) {
                    IntVec up = beta;
                    up[i] += 1;
                    if (roots.insert(up).second) next.push_back(up);
                }
            }
        }
        frontier = std::move(next);
    }
    return {roots.begin(), roots.end()};
}

// Positive coroots = positive roots of the transposed Cartan matrix, as
// coefficient vectors over the simple coroots h_i.
inline std::vector<IntVec> positive_coroots(const CartanDatum& cd) {
    return positive_roots_of(transpose(cd.c));
}

// Weyl dimension formula: prod <lam + rho, av> / <rho, av> over positive
// coroots av, with <mu, sum m_i h_i> = sum m_i mu_i.
inline Int weyl_dim(const CartanDatum& cd, const IntVec& lam) {
    if (lam.size() != cd.rank) throw std::invalid_argument("weight has wrong length");
    Rat dim = 1;
    for (const IntVec& av : positive_coroots(cd)) {
        Int num = 0, den = 0;
        for (size_t i = 0; i < cd.rank; ++i) {
            num += av[i] * (lam[i] + 1);
            den += av[i];
        }
        dim *= Rat(num) / Rat(den);
    }
    if (!is_integer(dim)) throw std::logic_error("Weyl dimension is not integral");
    return rat_num(dim);
}

}  // namespace polymut::oracles
