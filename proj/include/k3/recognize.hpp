#ifndef K3_RECOGNIZE_HPP
#define K3_RECOGNIZE_HPP

// Best-effort recognition of small even lattices against a catalog
// { U, <k> for even |k| <= 8, A_n (n <= 8), E6, E8, direct sums of <= 4 summands },
// a bounded search for integral congruences P * S * P^t = T, and detection of
// hyperbolic-plane (U) direct summands.

#include <map>
#include <numeric>
#include <optional>
#include <string>

#include "gram.hpp"

namespace k3 {

// --- bounded congruence search -------------------------------------------

namespace detail {

// Enumerate vectors of length n with entries in [-bound, bound], excluding 0.
inline std::vector<std::vector<Int>> box_vectors(size_t n, int bound) {
    std::vector<std::vector<Int>> out;
    std::vector<int> v(n, -bound);
    while (true) {
        if (std::any_of(v.begin(), v.end(), [](int x) { return x != 0; })) {
            std::vector<Int> w(n);
            for (size_t i = 0; i < n; ++i) w[i] = v[i];
            out.push_back(std::move(w));
        }
        size_t k = 0;
        while (k < n) {
            if (++v[k] <= bound) break;
            v[k++] = -bound;
        }
        if (k == n) break;
    }
    return out;
}

struct CongruenceSearch {
    const Mat& S;
    const Mat& T;
    std::vector<std::vector<Int>> cand;  // candidate rows
    std::vector<std::vector<Int>> Scand; // S * candidate (per row)
    std::map<Int, std::vector<size_t>> by_norm;
    std::vector<size_t> chosen;
    size_t n;

    CongruenceSearch(const Mat& s, const Mat& t, int bound) : S(s), T(t), n(rows(s)) {
        cand = box_vectors(n, bound);
        Scand.reserve(cand.size());
        for (size_t i = 0; i < cand.size(); ++i) {
            Scand.push_back(mat_vec(S, cand[i]));
            Int norm = 0;
            for (size_t j = 0; j < n; ++j) norm += cand[i][j] * Scand.back()[j];
            by_norm[norm].push_back(i);
        }
    }

    Int pairing(size_t a, size_t b) const {
        Int v = 0;
        for (size_t j = 0; j < n; ++j) v += cand[a][j] * Scand[b][j];
        return v;
    }

    bool dfs(size_t row) {
        if (row == n) {
            Mat P(n);
            for (size_t i = 0; i < n; ++i) P[i] = cand[chosen[i]];
            Int d = determinant(P);
            return d == 1 || d == -1;
        }
        auto it = by_norm.find(T[row][row]);
        if (it == by_norm.end()) return false;
        for (size_t ci : it->second) {
            bool ok = true;
            for (size_t j = 0; j < row && ok; ++j)
                if (pairing(ci, chosen[j]) != T[row][j]) ok = false;
            if (!ok) continue;
            chosen.push_back(ci);
            if (dfs(row + 1)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

} // namespace detail

// Bounded search for P with P*source*P^t = target, |det P| = 1, entries in
// [-bound, bound]. NotFound (nullopt) is not a proof of non-isometry.
inline std::optional<Mat> find_congruence(const Mat& source, const Mat& target, int bound = 2) {
    if (rows(source) != rows(target)) return std::nullopt;
    // cheap invariant screens before any enumeration
    if (determinant(source) != determinant(target)) return std::nullopt;
    if (signature_of(source) != signature_of(target)) return std::nullopt;
    detail::CongruenceSearch cs(source, target, bound);
    if (!cs.dfs(0)) return std::nullopt;
    Mat P(cs.n);
    for (size_t i = 0; i < cs.n; ++i) P[i] = cs.cand[cs.chosen[i]];
    if (!verify_congruence(P, source, target)) throw ComputationError("find_congruence: unverified witness");
    return P;
}

// --- catalog ---------------------------------------------------------------

struct CatalogEntry {
    std::string name;
    Mat gram;
};

inline Mat gram_rank1(const Int& k) { return Mat{{k}}; }

inline Mat gram_An(size_t nn) {
    Mat g(nn, std::vector<Int>(nn, 0));
    for (size_t i = 0; i < nn; ++i) {
        g[i][i] = -2;
        if (i + 1 < nn) g[i][i + 1] = g[i + 1][i] = 1;
    }
    return g;
}

inline const Mat gram_E6 = {
    {Int(-2), Int(1), Int(0), Int(0), Int(0), Int(0)},
    {Int(1), Int(-2), Int(1), Int(0), Int(0), Int(0)},
    {Int(0), Int(1), Int(-2), Int(1), Int(0), Int(1)},
    {Int(0), Int(0), Int(1), Int(-2), Int(1), Int(0)},
    {Int(0), Int(0), Int(0), Int(1), Int(-2), Int(0)},
    {Int(0), Int(0), Int(1), Int(0), Int(0), Int(-2)},
};

inline const Mat gram_E8 = {
    {Int(-2), Int(1), Int(0), Int(0), Int(0), Int(0), Int(0), Int(0)},
    {Int(1), Int(-2), Int(1), Int(0), Int(0), Int(0), Int(0), Int(0)},
    {Int(0), Int(1), Int(-2), Int(1), Int(0), Int(0), Int(0), Int(1)},
    {Int(0), Int(0), Int(1), Int(-2), Int(1), Int(0), Int(0), Int(0)},
    {Int(0), Int(0), Int(0), Int(1), Int(-2), Int(1), Int(0), Int(0)},
    {Int(0), Int(0), Int(0), Int(0), Int(1), Int(-2), Int(1), Int(0)},
    {Int(0), Int(0), Int(0), Int(0), Int(0), Int(1), Int(-2), Int(0)},
    {Int(0), Int(0), Int(1), Int(0), Int(0), Int(0), Int(0), Int(-2)},
};

inline const std::vector<CatalogEntry>& base_catalog() {
    static const std::vector<CatalogEntry> cat = [] {
        std::vector<CatalogEntry> c;
        c.push_back({"U", gram_U});
        for (int k : {-2, -4, -6, -8, 2, 4, 6, 8})
            c.push_back({"<" + std::to_string(k) + ">", gram_rank1(Int(k))});
        for (size_t nn = 1; nn <= 8; ++nn) c.push_back({"A" + std::to_string(nn), gram_An(nn)});
        c.push_back({"E6", gram_E6});
        c.push_back({"E8", gram_E8});
        return c;
    }();
    return cat;
}

enum class MatchLevel { VerifiedIsometric, SameInvariants, Unknown };

struct RecognitionResult {
    MatchLevel level = MatchLevel::Unknown;
    std::string name; // empty when Unknown
    std::optional<Mat> witness;
};

inline std::string match_level_str(MatchLevel l) {
    switch (l) {
        case MatchLevel::VerifiedIsometric: return "verified-isometric";
        case MatchLevel::SameInvariants: return "same-invariants";
        default: return "unknown";
    }
}

inline RecognitionResult recognize(const Mat& g, int bound = 2) {
    LatticeInvariants want = invariants(g);
    const auto& base = base_catalog();
    // precompute cheap invariants of catalog entries
    struct BaseInv {
        size_t rank;
        Int det;
        std::pair<size_t, size_t> sig;
    };
    static const std::vector<BaseInv> binv = [] {
        std::vector<BaseInv> v;
        for (const auto& e : base_catalog())
            v.push_back({rows(e.gram), determinant(e.gram), signature_of(e.gram)});
        return v;
    }();

    RecognitionResult best;
    // enumerate multisets of 1..4 catalog indices (non-decreasing index tuples)
    std::vector<size_t> pick;
    auto consider = [&](const std::vector<size_t>& ids) -> bool {
        size_t rank = 0;
        Int det = 1;
        std::pair<size_t, size_t> sig{0, 0};
        for (size_t id : ids) {
            rank += binv[id].rank;
            det *= binv[id].det;
            sig.first += binv[id].sig.first;
            sig.second += binv[id].sig.second;
        }
        if (rank != want.rank || det != want.determinant || sig != want.signature) return false;
        Mat cg;
        std::string nm;
        for (size_t id : ids) {
            cg = cg.empty() ? base[id].gram : direct_sum(cg, base[id].gram);
            nm += (nm.empty() ? "" : " + ") + base[id].name;
        }
        LatticeInvariants ci = invariants(cg);
        if (ci.disc.orders != want.disc.orders) {
            // compare as multisets (SNF chains already canonical, but be safe)
            auto a = ci.disc.orders, b = want.disc.orders;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a != b) return false;
        }
        if (!isometric_disc(want.disc, ci.disc)) return false;
        if (auto P = find_congruence(g, cg, bound)) {
            best = {MatchLevel::VerifiedIsometric, nm, P};
            return true;
        }
        if (best.level == MatchLevel::Unknown) best = {MatchLevel::SameInvariants, nm, std::nullopt};
        return false;
    };
    std::vector<size_t> ids;
    // depth-limited enumeration of non-decreasing index tuples
    auto rec = [&](auto&& self, size_t start, size_t depth) -> bool {
        if (!ids.empty() && consider(ids)) return true;
        if (depth == 4) return false;
        for (size_t i = start; i < base.size(); ++i) {
            ids.push_back(i);
            if (self(self, i, depth + 1)) return true;
            ids.pop_back();
        }
        return false;
    };
    rec(rec, 0, 0);
    return best;
}

// --- U-summand detection -----------------------------------------------------

// True iff a bounded search finds a basis of Z^n whose first two vectors span a
// hyperbolic plane U split off orthogonally. Requires an even lattice.
inline bool detect_U_summand(const Mat& g, int bound = 3) {
    size_t n = rows(g);
    if (n < 2) return false;
    auto vecs = detail::box_vectors(n, bound);
    for (const auto& e : vecs) {
        // primitive isotropic e with e . L = Z
        Int cont = 0;
        for (const auto& c : e) cont = boost::multiprecision::gcd(cont, c);
        if (cont != 1) continue;
        auto Ge = mat_vec(g, e);
        Int norm = 0;
        for (size_t j = 0; j < n; ++j) norm += e[j] * Ge[j];
        if (norm != 0) continue;
        Int gcdGe = 0;
        for (const auto& c : Ge) gcdGe = boost::multiprecision::gcd(gcdGe, c);
        if (abs(gcdGe) != 1) continue;
        // solve <f, e> = 1 by Smith form on the row vector Ge
        Mat row{Ge};
        SmithForm s = smith_normal_form(row);
        // U * row * V = [d, 0...]; with d = +-1, f = (sign) * first column of V^{-T}?
        // simpler: row * V = U^{-1} * D -> (row * V)[0] = U[0][0]^{-1} * d.
        // Since U is 1x1 with entry +-1: take f = column 0 of V scaled by U[0][0]*d sign.
        Int d = s.D[0][0] * s.U[0][0]; // row * V column 0 equals this
        std::vector<Int> f(n);
        for (size_t i = 0; i < n; ++i) f[i] = s.V[i][0] * d; // <f,e> = d*d = 1
        // make f isotropic: f' = f - (f^2/2) e (even lattice => f^2 even)
        auto Gf = mat_vec(g, f);
        Int f2 = 0;
        for (size_t j = 0; j < n; ++j) f2 += f[j] * Gf[j];
        if (reduce_mod(Rat(f2), 2) != 0) continue; // not an even lattice: skip
        Int half = f2 / 2;
        for (size_t j = 0; j < n; ++j) f[j] -= half * e[j];
        // verify the 2x2 block is U, then split: L = Ze + Zf + K with
        // K = kernel of x -> (<e,x>, <f,x>); primitivity gives a full basis.
        Gf = mat_vec(g, f);
        Int ef = 0;
        f2 = 0;
        for (size_t j = 0; j < n; ++j) {
            ef += e[j] * Gf[j];
            f2 += f[j] * Gf[j];
        }
        if (ef != 1 || f2 != 0) continue;
        // kernel basis over Z via SNF of the 2 x n pairing matrix
        Mat pairing{mat_vec(g, e), Gf};
        SmithForm ks = smith_normal_form(pairing);
        Mat P;
        P.push_back(e);
        P.push_back(f);
        for (size_t j = 2; j < n; ++j) {
            std::vector<Int> col(n);
            for (size_t i = 0; i < n; ++i) col[i] = ks.V[i][j];
            P.push_back(col);
        }
        Int dp = determinant(P);
        if (dp != 1 && dp != -1) continue;
        Mat res = mat_mul(mat_mul(P, g), transpose(P));
        bool ok = res[0][0] == 0 && res[1][1] == 0 && res[0][1] == 1 && res[1][0] == 1;
        for (size_t j = 2; j < n && ok; ++j)
            if (res[0][j] != 0 || res[1][j] != 0) ok = false;
        if (ok) return true;
    }
    return false;
}

} // namespace k3

#endif
