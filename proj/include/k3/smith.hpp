#ifndef K3_SMITH_HPP
#define K3_SMITH_HPP

// Smith normal form with unimodular transforms: U * A * V = D with D diagonal,
// non-negative, and d_i | d_{i+1}.

#include <cstdlib>

#include "matrix.hpp"

namespace k3 {

struct SmithForm {
    Mat U, D, V;
};

namespace detail {

inline void row_op_sub(Mat& A, Mat& U, size_t dst, size_t src, const Int& q) {
    for (size_t j = 0; j < cols(A); ++j) A[dst][j] -= q * A[src][j];
    for (size_t j = 0; j < cols(U); ++j) U[dst][j] -= q * U[src][j];
}
inline void col_op_sub(Mat& A, Mat& V, size_t dst, size_t src, const Int& q) {
    for (size_t i = 0; i < rows(A); ++i) A[i][dst] -= q * A[i][src];
    for (size_t i = 0; i < rows(V); ++i) V[i][dst] -= q * V[i][src];
}
inline void row_swap(Mat& A, Mat& U, size_t a, size_t b) {
    std::swap(A[a], A[b]);
    std::swap(U[a], U[b]);
}
inline void col_swap(Mat& A, Mat& V, size_t a, size_t b) {
    for (size_t i = 0; i < rows(A); ++i) std::swap(A[i][a], A[i][b]);
    for (size_t i = 0; i < rows(V); ++i) std::swap(V[i][a], V[i][b]);
}

} // namespace detail

inline SmithForm smith_normal_form(const Mat& M) {
    using namespace detail;
    size_t n = rows(M), m = cols(M);
    Mat A = M, U = identity(n), V = identity(m);
    size_t lim = std::min(n, m);

    for (size_t k = 0; k < lim; ++k) {
        // Clear row/column k. Each round re-selects the smallest-magnitude
        // nonzero entry of the trailing block as pivot, so the pivot
        // magnitude strictly decreases between rounds and entries stay
        // under control.
        bool done = false;
        while (!done) {
            bool found = false;
            size_t pi = k, pj = k;
            Int best = 0;
            for (size_t i = k; i < n; ++i)
                for (size_t j = k; j < m; ++j)
                    if (A[i][j] != 0 && (!found || abs(A[i][j]) < best)) {
                        found = true;
                        best = abs(A[i][j]);
                        pi = i;
                        pj = j;
                    }
            if (!found) { done = true; break; }
            row_swap(A, U, k, pi);
            col_swap(A, V, k, pj);

            done = true;
            for (size_t i = k + 1; i < n; ++i) {
                if (A[i][k] == 0) continue;
                Int q = floor_div(A[i][k], A[k][k]);
                row_op_sub(A, U, i, k, q);
                if (A[i][k] != 0) done = false;
            }
            for (size_t j = k + 1; j < m; ++j) {
                if (A[k][j] == 0) continue;
                Int q = floor_div(A[k][j], A[k][k]);
                col_op_sub(A, V, j, k, q);
                if (A[k][j] != 0) done = false;
            }
        }
        if (A[k][k] == 0) break;
    }

    // enforce the divisibility chain: fold d_{k+1} into column k and re-reduce
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t k = 0; k + 1 < lim; ++k) {
            Int a = A[k][k], b = A[k + 1][k + 1];
            if (a == 0 || b % a == 0) continue;
            changed = true;
            for (size_t i = 0; i < n; ++i) A[i][k] += A[i][k + 1];
            for (size_t i = 0; i < m; ++i) V[i][k] += V[i][k + 1];
            // the 2x2 block {k,k+1} is now non-diagonal; rediagonalize it
            while (A[k + 1][k] != 0 || A[k][k + 1] != 0) {
                if (A[k + 1][k] != 0) {
                    if (abs(A[k + 1][k]) < abs(A[k][k])) row_swap(A, U, k, k + 1);
                    Int q = floor_div(A[k + 1][k], A[k][k]);
                    row_op_sub(A, U, k + 1, k, q);
                }
                if (A[k][k + 1] != 0) {
                    if (abs(A[k][k + 1]) < abs(A[k][k])) col_swap(A, V, k, k + 1);
                    Int q = floor_div(A[k][k + 1], A[k][k]);
                    col_op_sub(A, V, k + 1, k, q);
                }
            }
        }
    }

    // normalize signs
    for (size_t k = 0; k < lim; ++k)
        if (A[k][k] < 0) {
            for (size_t i = 0; i < n; ++i) A[i][k] = -A[i][k];
            for (size_t i = 0; i < m; ++i) V[i][k] = -V[i][k];
        }

    // verify the factorization and unimodularity before returning
    if (mat_mul(mat_mul(U, M), V) != A) throw ComputationError("smith_normal_form: U*M*V != D");
    Int du = determinant(U), dv = determinant(V);
    if ((du != 1 && du != -1) || (dv != 1 && dv != -1))
        throw ComputationError("smith_normal_form: transform not unimodular");
    for (size_t k = 0; k + 1 < lim; ++k)
        if (A[k][k] != 0 && A[k + 1][k + 1] % A[k][k] != 0)
            throw ComputationError("smith_normal_form: divisibility chain violated");

    return SmithForm{U, A, V};
}

// Elementary divisors > 1, in divisibility order.
inline std::vector<Int> elementary_divisors(const Mat& M) {
    SmithForm s = smith_normal_form(M);
    std::vector<Int> out;
    for (size_t k = 0; k < std::min(rows(M), cols(M)); ++k)
        if (abs(s.D[k][k]) > 1) out.push_back(abs(s.D[k][k]));
    return out;
}

} // namespace k3

#endif
