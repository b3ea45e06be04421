#ifndef K3_MATRIX_HPP
#define K3_MATRIX_HPP

// Small dense exact-arithmetic matrix utilities over Int / Rat.

#include <vector>

#include "numeric.hpp"

namespace k3 {

using Mat = std::vector<std::vector<Int>>;
using RatMat = std::vector<std::vector<Rat>>;

inline size_t rows(const Mat& m) { return m.size(); }
inline size_t cols(const Mat& m) { return m.empty() ? 0 : m[0].size(); }

inline Mat identity(size_t n) {
    Mat I(n, std::vector<Int>(n, 0));
    for (size_t i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    if (cols(a) != rows(b)) throw ComputationError("mat_mul: shape mismatch");
    Mat c(rows(a), std::vector<Int>(cols(b), 0));
    for (size_t i = 0; i < rows(a); ++i)
        for (size_t k = 0; k < cols(a); ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < cols(b); ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

inline Mat transpose(const Mat& a) {
    Mat t(cols(a), std::vector<Int>(rows(a)));
    for (size_t i = 0; i < rows(a); ++i)
        for (size_t j = 0; j < cols(a); ++j) t[j][i] = a[i][j];
    return t;
}

inline std::vector<Int> mat_vec(const Mat& a, const std::vector<Int>& v) {
    if (cols(a) != v.size()) throw ComputationError("mat_vec: shape mismatch");
    std::vector<Int> r(rows(a), 0);
    for (size_t i = 0; i < rows(a); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    return r;
}

inline bool is_symmetric(const Mat& a) {
    if (rows(a) != cols(a)) return false;
    for (size_t i = 0; i < rows(a); ++i)
        for (size_t j = i + 1; j < cols(a); ++j)
            if (a[i][j] != a[j][i]) return false;
    return true;
}

// Fraction-free determinant (Bareiss).
inline Int determinant(const Mat& m) {
    size_t n = rows(m);
    if (n != cols(m)) throw ComputationError("determinant: not square");
    if (n == 0) return 1;
    Mat a = m;
    Int prev = 1;
    int sgn = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sgn = -sgn;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sgn * a[n - 1][n - 1];
}

// Rank via fraction-free row echelon.
inline size_t mat_rank(const Mat& m) {
    Mat a = m;
    size_t n = rows(a), c = cols(a), r = 0;
    for (size_t col = 0; col < c && r < n; ++col) {
        size_t p = r;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) continue;
        std::swap(a[r], a[p]);
        for (size_t i = r + 1; i < n; ++i) {
            if (a[i][col] == 0) continue;
            Int g = boost::multiprecision::gcd(a[i][col], a[r][col]);
            Int f_r = a[i][col] / g, f_i = a[r][col] / g;
            for (size_t j = 0; j < c; ++j) a[i][j] = a[i][j] * f_i - a[r][j] * f_r;
        }
        ++r;
    }
    return r;
}

// Exact inverse over the rationals; throws if singular.
inline RatMat rat_inverse(const Mat& m) {
    size_t n = rows(m);
    if (n != cols(m)) throw ComputationError("rat_inverse: not square");
    RatMat a(n, std::vector<Rat>(2 * n, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
        a[i][n + i] = 1;
    }
    for (size_t col = 0; col < n; ++col) {
        size_t p = col;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) throw ComputationError("rat_inverse: singular matrix");
        std::swap(a[col], a[p]);
        Rat piv = a[col][col];
        for (size_t j = 0; j < 2 * n; ++j) a[col][j] /= piv;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    RatMat inv(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

// Inverse of a unimodular integer matrix, returned over Int.
inline Mat unimodular_inverse(const Mat& m) {
    Int d = determinant(m);
    if (d != 1 && d != -1) throw ComputationError("unimodular_inverse: determinant is not +-1");
    RatMat ri = rat_inverse(m);
    Mat out(rows(m), std::vector<Int>(cols(m)));
    for (size_t i = 0; i < rows(m); ++i)
        for (size_t j = 0; j < cols(m); ++j) {
            if (!is_integer(ri[i][j])) throw ComputationError("unimodular_inverse: non-integer entry");
            out[i][j] = num(ri[i][j]);
        }
    return out;
}

// Characteristic polynomial coefficients of an n x n integer matrix,
// leading first: det(xI - M) = c[0] x^n + c[1] x^{n-1} + ... + c[n].
// Faddeev-LeVerrier over the rationals; result is integral.
inline std::vector<Int> char_poly(const Mat& m) {
    size_t n = rows(m);
    if (n != cols(m)) throw ComputationError("char_poly: not square");
    RatMat M(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) M[i][j] = Rat(m[i][j]);
    std::vector<Int> c(n + 1);
    c[0] = 1;
    RatMat N(n, std::vector<Rat>(n, 0)); // running M_k
    std::vector<Rat> ck(n + 1);
    ck[0] = 1;
    for (size_t k = 1; k <= n; ++k) {
        // N <- M * (N + c_{k-1} I)
        RatMat B = N;
        for (size_t i = 0; i < n; ++i) B[i][i] += ck[k - 1];
        RatMat MN(n, std::vector<Rat>(n, 0));
        for (size_t i = 0; i < n; ++i)
            for (size_t l = 0; l < n; ++l) {
                if (M[i][l] == 0) continue;
                for (size_t j = 0; j < n; ++j) MN[i][j] += M[i][l] * B[l][j];
            }
        N = MN;
        Rat tr = 0;
        for (size_t i = 0; i < n; ++i) tr += N[i][i];
        ck[k] = -tr / Rat(Int(k));
    }
    for (size_t k = 0; k <= n; ++k) {
        if (!is_integer(ck[k])) throw ComputationError("char_poly: non-integer coefficient");
        c[k] = num(ck[k]);
    }
    return c;
}

} // namespace k3

#endif
