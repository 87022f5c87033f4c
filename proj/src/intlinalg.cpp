#include "polymut/intlinalg.hpp"

#include <algorithm>

namespace polymut {

IntMat identity_mat(size_t n) {
    IntMat m(n, IntVec(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat transpose(const IntMat& m) {
    IntMat t(mat_cols(m), IntVec(mat_rows(m)));
    for (size_t i = 0; i < mat_rows(m); ++i)
        for (size_t j = 0; j < mat_cols(m); ++j) t[j][i] = m[i][j];
    return t;
}

IntVec mul_vec_mat(const IntVec& x, const IntMat& m) {
    if (x.size() != mat_rows(m)) throw std::invalid_argument("mul_vec_mat: size mismatch");
    IntVec y(mat_cols(m), 0);
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (size_t j = 0; j < y.size(); ++j) y[j] += x[i] * m[i][j];
    }
    return y;
}

RatVec mul_vec_mat(const RatVec& x, const IntMat& m) {
    if (x.size() != mat_rows(m)) throw std::invalid_argument("mul_vec_mat: size mismatch");
    RatVec y(mat_cols(m), 0);
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (size_t j = 0; j < y.size(); ++j) y[j] += x[i] * m[i][j];
    }
    return y;
}

IntMat mul_mat(const IntMat& a, const IntMat& b) {
    IntMat c(mat_rows(a));
    for (size_t i = 0; i < mat_rows(a); ++i) c[i] = mul_vec_mat(a[i], b);
    return c;
}

Int content(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

std::pair<IntVec, Int> primitive_part(const IntVec& v) {
    Int g = content(v);
    if (g == 0) throw std::invalid_argument("primitive_part: zero vector");
    IntVec p(v.size());
    for (size_t i = 0; i < v.size(); ++i) p[i] = v[i] / g;
    return {p, g};
}

HnfResult hnf(const IntMat& m) {
    const size_t rows = mat_rows(m), cols = mat_cols(m);
    HnfResult r;
    r.H = m;
    r.U = identity_mat(rows);
    size_t pr = 0;  // next pivot row
    for (size_t c = 0; c < cols && pr < rows; ++c) {
        // clear the column below pr with gcd steps
        while (true) {
            size_t nz = rows;
            for (size_t i = pr; i < rows; ++i)
                if (r.H[i][c] != 0) { nz = i; break; }
            if (nz == rows) break;
            // move the row with the smallest |entry| to pr
            size_t best = nz;
            for (size_t i = nz + 1; i < rows; ++i)
                if (r.H[i][c] != 0 &&
                    boost::multiprecision::abs(r.H[i][c]) < boost::multiprecision::abs(r.H[best][c]))
                    best = i;
            std::swap(r.H[pr], r.H[best]);
            std::swap(r.U[pr], r.U[best]);
            bool done = true;
            for (size_t i = pr + 1; i < rows; ++i) {
                if (r.H[i][c] == 0) continue;
                Int q = r.H[i][c] / r.H[pr][c];
                if (q != 0) {
                    for (size_t j = 0; j < cols; ++j) r.H[i][j] -= q * r.H[pr][j];
                    for (size_t j = 0; j < rows; ++j) r.U[i][j] -= q * r.U[pr][j];
                }
                if (r.H[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (r.H[pr][c] == 0) continue;
        if (r.H[pr][c] < 0) {
            for (size_t j = 0; j < cols; ++j) r.H[pr][j] = -r.H[pr][j];
            for (size_t j = 0; j < rows; ++j) r.U[pr][j] = -r.U[pr][j];
        }
        // reduce entries above the pivot into [0, pivot)
        for (size_t i = 0; i < pr; ++i) {
            Int q = r.H[i][c] / r.H[pr][c];
            if (r.H[i][c] - q * r.H[pr][c] < 0) --q;
            if (q != 0) {
                for (size_t j = 0; j < cols; ++j) r.H[i][j] -= q * r.H[pr][j];
                for (size_t j = 0; j < rows; ++j) r.U[i][j] -= q * r.U[pr][j];
            }
        }
        ++pr;
    }
    r.rank = pr;
    return r;
}

Int det(const IntMat& m) {
    const size_t n = mat_rows(m);
    if (n != mat_cols(m)) throw std::invalid_argument("det: non-square matrix");
    if (n == 0) return 1;
    // Bareiss: exact fraction-free elimination
    IntMat a = m;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t s = n;
            for (size_t i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { s = i; break; }
            if (s == n) return 0;
            std::swap(a[k], a[s]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

bool is_unimodular(const IntMat& m) {
    if (mat_rows(m) != mat_cols(m))
        throw std::invalid_argument("is_unimodular: non-square matrix");
    Int d = det(m);
    return d == 1 || d == -1;
}

IntMat left_kernel(const IntMat& m) {
    HnfResult r = hnf(m);
    IntMat k;
    for (size_t i = r.rank; i < mat_rows(m); ++i) k.push_back(r.U[i]);
    return k;
}

size_t rat_rank(RatMat m) {
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t p = rows;
        for (size_t i = rank; i < rows; ++i)
            if (m[i][c] != 0) { p = i; break; }
        if (p == rows) continue;
        std::swap(m[rank], m[p]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][c] == 0) continue;
            Rat f = m[i][c] / m[rank][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::optional<RatVec> solve_left(const RatMat& m, const RatVec& b) {
    // x * m = b  <=>  m^T x^T = b^T; eliminate on the augmented transpose.
    size_t n = m.size();                    // unknowns
    size_t e = n ? m[0].size() : b.size();  // equations
    if (b.size() != e) throw std::invalid_argument("solve_left: size mismatch");
    RatMat aug(e, RatVec(n + 1));
    for (size_t i = 0; i < e; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = m[j][i];
        aug[i][n] = b[i];
    }
    std::vector<size_t> pivot_col;
    size_t rank = 0;
    for (size_t c = 0; c < n && rank < e; ++c) {
        size_t p = e;
        for (size_t i = rank; i < e; ++i)
            if (aug[i][c] != 0) { p = i; break; }
        if (p == e) continue;
        std::swap(aug[rank], aug[p]);
        for (size_t i = 0; i < e; ++i) {
            if (i == rank || aug[i][c] == 0) continue;
            Rat f = aug[i][c] / aug[rank][c];
            for (size_t j = c; j <= n; ++j) aug[i][j] -= f * aug[rank][j];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    for (size_t i = rank; i < e; ++i)
        if (aug[i][n] != 0) return std::nullopt;  // inconsistent
    RatVec x(n, 0);
    for (size_t i = 0; i < rank; ++i) x[pivot_col[i]] = aug[i][n] / aug[i][pivot_col[i]];
    return x;
}

std::optional<RatMat> rat_inverse(const RatMat& m) {
    size_t n = m.size();
    if (n == 0 || m[0].size() != n) throw std::invalid_argument("rat_inverse: non-square");
    RatMat aug(n, RatVec(2 * n, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    for (size_t c = 0; c < n; ++c) {
        size_t p = n;
        for (size_t i = c; i < n; ++i)
            if (aug[i][c] != 0) { p = i; break; }
        if (p == n) return std::nullopt;
        std::swap(aug[c], aug[p]);
        Rat d = aug[c][c];
        for (size_t j = 0; j < 2 * n; ++j) aug[c][j] /= d;
        for (size_t i = 0; i < n; ++i) {
            if (i == c || aug[i][c] == 0) continue;
            Rat f = aug[i][c];
            for (size_t j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[c][j];
        }
    }
    RatMat inv(n, RatVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

Rat rat_det(RatMat m) {
    size_t n = m.size();
    if (n == 0) return 1;
    if (m[0].size() != n) throw std::invalid_argument("rat_det: non-square");
    Rat d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = n;
        for (size_t i = c; i < n; ++i)
            if (m[i][c] != 0) { p = i; break; }
        if (p == n) return 0;
        if (p != c) { std::swap(m[c], m[p]); d = -d; }
        d *= m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[c][c];
            for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

RatMat to_rat(const IntMat& m) {
    RatMat r(m.size());
    for (size_t i = 0; i < m.size(); ++i) r[i] = to_rat(m[i]);
    return r;
}

IntMat scale_rows_to_int(const RatMat& m) {
    IntMat r(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        Int l = 1;
        for (const Rat& x : m[i]) l = boost::multiprecision::lcm(l, rat_den(x));
        IntVec row(m[i].size());
        for (size_t j = 0; j < m[i].size(); ++j)
            row[j] = rat_num(m[i][j]) * (l / rat_den(m[i][j]));
        r[i] = std::move(row);
    }
    return r;
}

IntMat complete_basis(const IntMat& b) {
    const size_t q = mat_rows(b), m = mat_cols(b);
    if (q > m) throw std::invalid_argument("complete_basis: too many rows");
    // HNF of b^T: U * b^T = [T; 0] with T upper triangular. Saturation of the
    // row lattice of b makes T unimodular, so W = (U^{-1})^T writes b as
    // [T^T | 0] * W and the bottom rows of W complete the basis.
    HnfResult r = hnf(transpose(b));
    if (r.rank != q) throw std::invalid_argument("complete_basis: rows not independent");
    Int t = 1;
    for (size_t i = 0; i < q; ++i) t *= r.H[i][i];
    if (t != 1 && t != -1)
        throw std::invalid_argument("complete_basis: basis not saturated");
    auto uinv = rat_inverse(to_rat(r.U));
    IntMat w = scale_rows_to_int(*uinv);  // integral since U unimodular
    w = transpose(w);
    // rows of w now satisfy: first q rows span the same lattice as b; replace
    // them by b itself and keep the complement rows.
    IntMat out = b;
    for (size_t i = q; i < m; ++i) out.push_back(w[i]);
    // the swap of the top block by b changes the determinant by det(T)=±1
    if (!is_unimodular(out)) throw std::logic_error("complete_basis: completion failed");
    return out;
}

}  // namespace polymut
