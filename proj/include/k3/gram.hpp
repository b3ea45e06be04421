#ifndef K3_GRAM_HPP
#define K3_GRAM_HPP

// Invariants of integer symmetric bilinear forms: rank, signature, determinant,
// discriminant group and its finite quadratic form, congruence verification,
// and the rank-22 duality check (rank + signature + anti-isometric disc forms).

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "smith.hpp"

namespace k3 {

struct Degenerate : ComputationError {
    using ComputationError::ComputationError;
};

struct DiscForm {
    std::vector<Int> orders;      // elementary divisors > 1, divisibility order
    std::vector<Rat> q;           // q(g_i) mod 2Z, representative in [0,2)
    std::vector<Rat> b;           // b(g_i,g_j) mod Z for i<j, row-major upper triangle, in [0,1)
    bool operator==(const DiscForm&) const = default;
};

struct LatticeInvariants {
    size_t rank = 0;
    std::pair<size_t, size_t> signature{0, 0}; // (n_plus, n_minus)
    Int determinant = 0;
    DiscForm disc;
};

// Signature of a nondegenerate symmetric integer matrix by Descartes sign
// changes on the (all-real-rooted) characteristic polynomial.
inline std::pair<size_t, size_t> signature_of(const Mat& g) {
    std::vector<Int> cp = char_poly(g);
    std::vector<int> signs;
    for (const Int& c : cp)
        if (c != 0) signs.push_back(c > 0 ? 1 : -1);
    size_t npos = 0;
    for (size_t i = 0; i + 1 < signs.size(); ++i)
        if (signs[i] != signs[i + 1]) ++npos;
    size_t zero_mult = 0;
    for (size_t i = cp.size(); i-- > 0 && cp[i] == 0;) ++zero_mult;
    size_t rank = rows(g) - zero_mult;
    return {npos, rank - npos};
}

inline DiscForm disc_form(const Mat& g) {
    size_t n = rows(g);
    SmithForm s = smith_normal_form(g);
    Mat Ui = unimodular_inverse(s.U);
    RatMat Gi = rat_inverse(g);
    // generators: columns of U^{-1} whose diagonal elementary divisor exceeds 1
    std::vector<std::vector<Int>> gens;
    DiscForm d;
    for (size_t i = 0; i < n; ++i) {
        Int div = abs(s.D[i][i]);
        if (div > 1) {
            d.orders.push_back(div);
            std::vector<Int> col(n);
            for (size_t r = 0; r < n; ++r) col[r] = Ui[r][i];
            gens.push_back(col);
        }
    }
    auto pair_val = [&](const std::vector<Int>& a, const std::vector<Int>& b2) {
        Rat v = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) v += Rat(a[i]) * Gi[i][j] * Rat(b2[j]);
        return v;
    };
    for (const auto& gv : gens) d.q.push_back(reduce_mod(pair_val(gv, gv), 2));
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            d.b.push_back(reduce_mod(pair_val(gens[i], gens[j]), 1));
    return d;
}

inline LatticeInvariants invariants(const Mat& g) {
    if (!is_symmetric(g)) throw InputError("invariants: matrix is not symmetric");
    LatticeInvariants inv;
    inv.determinant = determinant(g);
    if (inv.determinant == 0) throw Degenerate("invariants: degenerate form (det = 0)");
    inv.rank = rows(g);
    inv.signature = signature_of(g);
    inv.disc = disc_form(g);
    return inv;
}

inline bool verify_congruence(const Mat& P, const Mat& source, const Mat& target) {
    if (rows(P) != rows(source) || rows(source) != rows(target)) return false;
    Int d = determinant(P);
    if (d != 1 && d != -1) return false;
    return mat_mul(mat_mul(P, source), transpose(P)) == target;
}

inline Mat direct_sum(const Mat& a, const Mat& b) {
    size_t n = rows(a), m = rows(b);
    Mat s(n + m, std::vector<Int>(n + m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) s[i][j] = a[i][j];
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) s[n + i][n + j] = b[i][j];
    return s;
}

namespace detail {

// All elements of Z/d1 x ... x Z/dk as coefficient tuples.
inline std::vector<std::vector<Int>> group_elements(const std::vector<Int>& divs) {
    std::vector<std::vector<Int>> out{{}};
    for (const Int& d : divs) {
        std::vector<std::vector<Int>> next;
        for (const auto& e : out)
            for (Int a = 0; a < d; ++a) {
                auto f = e;
                f.push_back(a);
                next.push_back(f);
            }
        out = next;
    }
    return out;
}

// q(sum a_i g_i) = sum a_i^2 q_i + 2 sum_{i<j} a_i a_j b_ij, reduced mod 2Z.
inline Rat qval(const std::vector<Int>& coeffs, const DiscForm& d) {
    Rat v = 0;
    for (size_t i = 0; i < coeffs.size(); ++i) v += Rat(coeffs[i] * coeffs[i]) * d.q[i];
    size_t k = 0;
    for (size_t i = 0; i < coeffs.size(); ++i)
        for (size_t j = i + 1; j < coeffs.size(); ++j)
            v += Rat(2 * coeffs[i] * coeffs[j]) * d.b[k++];
    return reduce_mod(v, 2);
}

} // namespace detail

// Exhaustive search for a group isomorphism phi with
// q2(phi(x)) = sign * q1(x) mod 2Z for all x. Group orders in scope are tiny
// (<= 8), so enumeration is instant.
inline bool disc_forms_related(const DiscForm& d1, const DiscForm& d2, int sign) {
    auto s1 = d1.orders, s2 = d2.orders;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return false;
    if (d1.orders.empty()) return true;
    auto els1 = detail::group_elements(d1.orders);
    auto els2 = detail::group_elements(d2.orders);
    size_t n1 = d1.orders.size(), n2 = d2.orders.size();
    // candidate generator images: iterate over tuples of elements of group 2
    std::vector<size_t> idx(n1, 0);
    while (true) {
        // well-definedness: order(g_i) * image_i = 0 in group 2
        bool ok = true;
        for (size_t i = 0; i < n1 && ok; ++i)
            for (size_t j = 0; j < n2 && ok; ++j)
                if ((d1.orders[i] * els2[idx[i]][j]) % d2.orders[j] != 0) ok = false;
        if (ok) {
            // build the full map, check bijectivity and the q condition
            std::vector<std::vector<Int>> images;
            images.reserve(els1.size());
            bool match = true;
            for (const auto& e : els1) {
                std::vector<Int> img(n2, 0);
                for (size_t i = 0; i < n1; ++i)
                    for (size_t j = 0; j < n2; ++j) img[j] += e[i] * els2[idx[i]][j];
                for (size_t j = 0; j < n2; ++j)
                    img[j] = ((img[j] % d2.orders[j]) + d2.orders[j]) % d2.orders[j];
                if (reduce_mod(detail::qval(img, d2) - Rat(sign) * detail::qval(e, d1), 2) != 0) {
                    match = false;
                    break;
                }
                images.push_back(img);
            }
            if (match) {
                std::sort(images.begin(), images.end());
                images.erase(std::unique(images.begin(), images.end()), images.end());
                if (images.size() == els1.size()) return true;
            }
        }
        // advance the image-tuple odometer
        size_t k = 0;
        while (k < n1) {
            if (++idx[k] < els2.size()) break;
            idx[k++] = 0;
        }
        if (k == n1) break;
    }
    return false;
}

inline bool anti_isometric(const DiscForm& d1, const DiscForm& d2) {
    return disc_forms_related(d1, d2, -1);
}
inline bool isometric_disc(const DiscForm& d1, const DiscForm& d2) {
    return disc_forms_related(d1, d2, +1);
}

inline const Mat gram_U = {{Int(0), Int(1)}, {Int(1), Int(0)}};

struct DualityReport {
    size_t rank_s = 0, rank_t_ext = 0;
    bool rank_ok = false;      // rank(s) + rank(U + t) = 22
    bool signature_ok = false; // sign(s) = (1, rank-1), sign(U+t) = (2, rank-2)
    bool disc_ok = false;      // q_s anti-isometric to q_{U+t}
    bool all_ok() const { return rank_ok && signature_ok && disc_ok; }
};

inline DualityReport check_duality(const Mat& s, const Mat& t) {
    DualityReport r;
    Mat text = direct_sum(gram_U, t);
    r.rank_s = rows(s);
    r.rank_t_ext = rows(text);
    r.rank_ok = (r.rank_s + r.rank_t_ext == 22);
    auto sig_s = signature_of(s), sig_t = signature_of(text);
    r.signature_ok = (sig_s == std::make_pair(size_t(1), r.rank_s - 1)) &&
                     (sig_t == std::make_pair(size_t(2), r.rank_t_ext - 2));
    r.disc_ok = anti_isometric(disc_form(s), disc_form(text));
    return r;
}

} // namespace k3

#endif
