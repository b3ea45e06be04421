#ifndef K3_CURVE_HPP
#define K3_CURVE_HPP

// Torus-type sextics F2^3 + F3^2: expansion, Newton-support membership in a
// polytope via the monomial correspondence, exact singular-point verification,
// Milnor numbers by truncated-jet linear algebra, ADE classification
// (A_n / E6), and the resultant-based transversality count.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "monomial.hpp"
#include "polynomial.hpp"
#include "polytope.hpp"

namespace k3 {

struct NotSingular : ComputationError {
    using ComputationError::ComputationError;
};
struct NotIsolated : ComputationError {
    using ComputationError::ComputationError;
};
struct CommonComponent : ComputationError {
    using ComputationError::ComputationError;
};

// ---- HomPoly arithmetic ----

inline HomPoly hom_add(const HomPoly& a, const HomPoly& b) {
    if (a.degree != b.degree && !a.terms.empty() && !b.terms.empty())
        throw DegreeMismatch("adding polynomials of different degrees");
    HomPoly r;
    r.degree = a.terms.empty() ? b.degree : a.degree;
    r.terms = a.terms;
    for (const auto& [e, c] : b.terms) {
        auto [it, inserted] = r.terms.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) r.terms.erase(it);
        }
    }
    return r;
}

inline HomPoly hom_mul(const HomPoly& a, const HomPoly& b) {
    HomPoly r;
    r.degree = a.degree + b.degree;
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            HomExp e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            auto [it, inserted] = r.terms.emplace(e, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) r.terms.erase(it);
            }
        }
    return r;
}

inline HomPoly hom_pow(const HomPoly& a, int n) {
    HomPoly r;
    r.degree = 0;
    r.terms[{0, 0, 0}] = 1;
    for (int i = 0; i < n; ++i) r = hom_mul(r, a);
    return r;
}

// F = f2^3 + f3^2
inline HomPoly expand_torus(const HomPoly& f2, const HomPoly& f3) {
    if (f2.degree != 2 || f3.degree != 3)
        throw DegreeMismatch("torus curve needs degrees 2 and 3");
    return hom_add(hom_pow(f2, 3), hom_pow(f3, 2));
}

// ---- support membership ----

struct MonomialVerdict {
    WeightedMonomial monomial;
    LatticePoint point;
    bool inside = false;
};

struct MembershipReport {
    std::vector<MonomialVerdict> entries; // per monomial of F, plus the W^2 point
    bool all_inside = false;
};

inline MembershipReport support_polytope_membership(const HomPoly& f, const Polytope& delta) {
    if (f.degree != 6) throw DegreeMismatch("support membership expects a sextic");
    MembershipReport rep;
    rep.all_inside = true;
    for (const auto& [e, c] : f.terms) {
        WeightedMonomial m{{Int(e[0]), Int(e[1]), Int(e[2]), Int(0)}};
        LatticePoint p = monomial_to_point(m);
        bool in = delta.contains(p);
        rep.entries.push_back({m, p, in});
        rep.all_inside &= in;
    }
    // the W^2 term of the double cover W^2 = F(X,Y,Z)
    WeightedMonomial w2{{Int(0), Int(0), Int(0), Int(2)}};
    LatticePoint pw = monomial_to_point(w2);
    bool in = delta.contains(pw);
    rep.entries.push_back({w2, pw, in});
    rep.all_inside &= in;
    return rep;
}

// ---- projective points and affine germs ----

struct ProjPoint {
    std::array<Rat, 3> coords{};

    // normalize: last nonzero coordinate scaled to 1
    static ProjPoint make(Rat a, Rat b, Rat c) {
        if (a == 0 && b == 0 && c == 0) throw InputError("(0:0:0) is not a projective point");
        ProjPoint p{{std::move(a), std::move(b), std::move(c)}};
        int k = p.chart();
        for (int i = 0; i < 3; ++i)
            if (i != k) p.coords[i] /= p.coords[k];
        p.coords[k] = 1;
        return p;
    }
    int chart() const { // index of last nonzero coordinate
        for (int i = 2; i >= 0; --i)
            if (coords[i] != 0) return i;
        throw InputError("zero projective point");
    }
    bool operator==(const ProjPoint&) const = default;
    bool operator<(const ProjPoint& o) const {
        for (int i = 0; i < 3; ++i) {
            if (coords[i] < o.coords[i]) return true;
            if (coords[i] > o.coords[i]) return false;
        }
        return false;
    }
    std::string str() const {
        return "(" + rat_str(coords[0]) + ":" + rat_str(coords[1]) + ":" + rat_str(coords[2]) + ")";
    }
};

// affine polynomial in two local variables
using AffExp = std::pair<int, int>;
using AffPoly = std::map<AffExp, Rat>;

inline void aff_add_term(AffPoly& p, AffExp e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = p.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

inline AffPoly aff_mul(const AffPoly& a, const AffPoly& b) {
    AffPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b)
            aff_add_term(r, {ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return r;
}

inline AffPoly aff_dx(const AffPoly& p) {
    AffPoly r;
    for (const auto& [e, c] : p)
        if (e.first > 0) aff_add_term(r, {e.first - 1, e.second}, c * e.first);
    return r;
}
inline AffPoly aff_dy(const AffPoly& p) {
    AffPoly r;
    for (const auto& [e, c] : p)
        if (e.second > 0) aff_add_term(r, {e.first, e.second - 1}, c * e.second);
    return r;
}

// Dehomogenize F in the chart of p's last nonzero coordinate and translate p
// to the origin: germ g(u,v) with g(0,0) = F(p) up to a unit.
inline AffPoly dehomogenize_at(const HomPoly& f, const ProjPoint& p) {
    int k = p.chart();
    int rest[2];
    for (int i = 0, j = 0; i < 3; ++i)
        if (i != k) rest[j++] = i;
    // X_rest0 -> u + p0, X_rest1 -> v + p1, X_k -> 1
    AffPoly u_shift, v_shift, one;
    aff_add_term(u_shift, {1, 0}, 1);
    aff_add_term(u_shift, {0, 0}, p.coords[rest[0]]);
    aff_add_term(v_shift, {0, 1}, 1);
    aff_add_term(v_shift, {0, 0}, p.coords[rest[1]]);
    aff_add_term(one, {0, 0}, 1);
    // precompute powers
    int d = f.degree;
    std::vector<AffPoly> up(d + 1), vp(d + 1);
    up[0] = one;
    vp[0] = one;
    for (int i = 1; i <= d; ++i) {
        up[i] = aff_mul(up[i - 1], u_shift);
        vp[i] = aff_mul(vp[i - 1], v_shift);
    }
    AffPoly g;
    for (const auto& [e, c] : f.terms) {
        AffPoly t = aff_mul(up[e[rest[0]]], vp[e[rest[1]]]);
        for (auto& [me, mc] : t) aff_add_term(g, me, mc * c);
    }
    return g;
}

inline Rat hom_eval(const HomPoly& f, const ProjPoint& p) {
    Rat v = 0;
    for (const auto& [e, c] : f.terms) {
        Rat t = c;
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < e[i]; ++k) t *= p.coords[i];
        v += t;
    }
    return v;
}

inline HomPoly hom_partial(const HomPoly& f, int var) {
    HomPoly r;
    r.degree = f.degree - 1;
    for (const auto& [e, c] : f.terms) {
        if (e[var] == 0) continue;
        HomExp ne = e;
        ne[var] -= 1;
        r.terms[ne] = c * e[var];
    }
    return r;
}

// F(p) = 0 and all three partials vanish (exact rational evaluation)
inline bool verify_singular(const HomPoly& f, const ProjPoint& p) {
    if (hom_eval(f, p) != 0) return false;
    for (int i = 0; i < 3; ++i)
        if (hom_eval(hom_partial(f, i), p) != 0) return false;
    return true;
}

// ---- Milnor number by truncated jets ----

// mu = dim Q[[u,v]] / (g_u, g_v): rank of all monomial multiples of the two
// partials truncated at total degree <= D, stabilized across consecutive D.
inline int milnor_number(const HomPoly& f, const ProjPoint& p, int cap = 40) {
    AffPoly g = dehomogenize_at(f, p);
    {
        Rat g0 = 0, gu0 = 0, gv0 = 0;
        auto it = g.find({0, 0});
        if (it != g.end()) g0 = it->second;
        auto iu = g.find({1, 0});
        if (iu != g.end()) gu0 = iu->second;
        auto iv = g.find({0, 1});
        if (iv != g.end()) gv0 = iv->second;
        if (g0 != 0 || gu0 != 0 || gv0 != 0)
            throw NotSingular("point " + p.str() + " is not a singular point of the curve");
    }
    AffPoly gu = aff_dx(g), gv = aff_dy(g);
    int prev = -1;
    for (int D = 3; D <= cap; ++D) {
        // monomial index over degrees <= D
        std::map<AffExp, int> idx;
        int nm = 0;
        for (int d = 0; d <= D; ++d)
            for (int a = 0; a <= d; ++a) idx[{a, d - a}] = nm++;
        // sparse rows: monomial multiples of gu, gv truncated at degree D
        std::map<int, std::map<int, Rat>> pivots; // leading index -> reduced row
        int rank = 0;
        for (const AffPoly* part : {&gu, &gv}) {
            if (part->empty()) continue;
            int og = cap + 1;
            for (const auto& [e, c] : *part) og = std::min(og, e.first + e.second);
            for (int ma = 0; ma + og <= D; ++ma)
                for (int mb = 0; ma + mb + og <= D; ++mb) {
                    std::map<int, Rat> row;
                    for (const auto& [e, c] : *part)
                        if (e.first + ma + e.second + mb <= D) row[idx[{e.first + ma, e.second + mb}]] = c;
                    // reduce against existing pivots
                    while (!row.empty()) {
                        int lead = row.begin()->first;
                        auto pit = pivots.find(lead);
                        if (pit == pivots.end()) {
                            pivots.emplace(lead, std::move(row));
                            ++rank;
                            break;
                        }
                        Rat factor = row.begin()->second / pit->second.at(lead);
                        for (const auto& [k, v] : pit->second) {
                            auto [it2, ins] = row.emplace(k, -factor * v);
                            if (!ins) {
                                it2->second -= factor * v;
                                if (it2->second == 0) row.erase(it2);
                            }
                        }
                    }
                }
        }
        int dim = nm - rank;
        if (dim == prev) return dim;
        prev = dim;
    }
    throw NotIsolated("Milnor number did not stabilize by degree cap; singularity may be non-isolated");
}

inline int hessian_corank(const HomPoly& f, const ProjPoint& p) {
    AffPoly g = dehomogenize_at(f, p);
    Rat uu = 0, uv = 0, vv = 0;
    for (const auto& [e, c] : g) {
        if (e == AffExp{2, 0}) uu = 2 * c;
        if (e == AffExp{1, 1}) uv = c;
        if (e == AffExp{0, 2}) vv = 2 * c;
    }
    if (uu == 0 && uv == 0 && vv == 0) return 2;
    if (uu * vv - uv * uv != 0) return 0;
    return 1;
}

// degree-3 part of the germ is a perfect cube of a linear form
// iff its Hessian covariant vanishes identically
inline bool cubic_part_is_cube(const HomPoly& f, const ProjPoint& p) {
    AffPoly g = dehomogenize_at(f, p);
    AffPoly c3;
    for (const auto& [e, c] : g)
        if (e.first + e.second == 3) aff_add_term(c3, e, c);
    if (c3.empty()) return false;
    AffPoly cxx = aff_dx(aff_dx(c3)), cyy = aff_dy(aff_dy(c3)), cxy = aff_dy(aff_dx(c3));
    AffPoly h = aff_mul(cxx, cyy);
    for (const auto& [e, c] : aff_mul(cxy, cxy)) aff_add_term(h, e, -c);
    return h.empty();
}

struct SingularPointReport {
    ProjPoint point;
    int milnor = 0;
    int corank = 0;
    std::string ade_type; // "A<n>", "E6", or "Unclassified(mu,corank)"
};

inline SingularPointReport classify_ade(const HomPoly& f, const ProjPoint& p) {
    SingularPointReport rep;
    rep.point = p;
    rep.milnor = milnor_number(f, p);
    rep.corank = hessian_corank(f, p);
    if (rep.corank <= 1) rep.ade_type = "A" + std::to_string(rep.milnor);
    else if (rep.corank == 2 && rep.milnor == 6 && cubic_part_is_cube(f, p)) rep.ade_type = "E6";
    else
        rep.ade_type = "Unclassified(" + std::to_string(rep.milnor) + "," +
                       std::to_string(rep.corank) + ")";
    return rep;
}

// Rational singular points with coordinates p/q, |p| <= 6*q, q <= 4 (the
// convenience grid; fixture points all lie on it).
inline std::vector<ProjPoint> rational_singular_points(const HomPoly& f) {
    std::vector<Rat> cands;
    for (int q = 1; q <= 4; ++q)
        for (int p = -6 * q; p <= 6 * q; ++p) cands.push_back(Rat(p, q));
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    std::vector<ProjPoint> out;
    auto consider = [&](Rat a, Rat b, Rat c) {
        ProjPoint p = ProjPoint::make(std::move(a), std::move(b), std::move(c));
        if (std::find(out.begin(), out.end(), p) != out.end()) return;
        if (verify_singular(f, p)) out.push_back(p);
    };
    for (const Rat& a : cands)
        for (const Rat& b : cands) consider(a, b, 1);
    for (const Rat& a : cands) consider(a, 1, 0);
    consider(1, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// ---- transversality via resultants ----

namespace detail {

using UniPoly = std::vector<Rat>; // coefficients, index = power

inline void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
inline int uni_deg(const UniPoly& p) { return (int)p.size() - 1; }

inline UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    uni_trim(r);
    return r;
}
inline UniPoly uni_add(UniPoly a, const UniPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    uni_trim(a);
    return a;
}
inline UniPoly uni_scale(UniPoly a, const Rat& c) {
    for (auto& x : a) x *= c;
    return a;
}
inline UniPoly uni_rem(UniPoly a, const UniPoly& b) {
    uni_trim(a);
    while (!a.empty() && a.size() >= b.size()) {
        Rat f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        uni_trim(a);
    }
    return a;
}
inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        UniPoly r = uni_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}
inline UniPoly uni_derivative(const UniPoly& p) {
    UniPoly r;
    for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * Rat(Int(i)));
    uni_trim(r);
    return r;
}

// determinant of a small matrix of univariate polynomials by Laplace expansion
inline UniPoly uni_det(const std::vector<std::vector<UniPoly>>& m) {
    size_t n = m.size();
    if (n == 0) return UniPoly{Rat(1)};
    if (n == 1) return m[0][0];
    UniPoly acc;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].empty()) continue;
        std::vector<std::vector<UniPoly>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<UniPoly> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        UniPoly term = uni_mul(m[0][j], uni_det(minor));
        if (j % 2) term = uni_scale(std::move(term), Rat(-1));
        acc = uni_add(std::move(acc), term);
    }
    uni_trim(acc);
    return acc;
}

} // namespace detail

struct TransversalityReport {
    int eliminated_var = -1;    // 0=X, 1=Y, 2=Z
    int resultant_degree = 0;   // degree of the binary-form resultant (with infinity roots)
    int distinct_roots = 0;     // distinct projective roots
    bool squarefree = false;    // all intersections transversal
};

// Count distinct intersection points of the conic and cubic: the resultant
// with respect to one variable (one whose leading coefficient is a nonzero
// constant) is a binary sextic; squarefree of full degree 6 means six
// transversal intersections.
inline TransversalityReport transversal_intersection_count(const HomPoly& f2, const HomPoly& f3) {
    if (f2.degree != 2 || f3.degree != 3) throw DegreeMismatch("expected degrees 2 and 3");
    if (f2.terms.empty() || f3.terms.empty()) throw CommonComponent("zero polynomial");
    for (int var = 2; var >= 0; --var) {
        // degrees in the eliminated variable
        int da = 0, db = 0;
        for (const auto& [e, c] : f2.terms) da = std::max(da, e[var]);
        for (const auto& [e, c] : f3.terms) db = std::max(db, e[var]);
        if (da < 1 || db < 1) continue;
        // validity: one of the curves must miss the projection center (the
        // coordinate point of `var`), i.e. have full degree in `var` there
        if (da != f2.degree && db != f3.degree) continue;
        int o1 = (var + 1) % 3, o2 = (var + 2) % 3;
        if (o1 > o2) std::swap(o1, o2);
        // dehomogenized resultant with main variable T = X_main, other = 1
        auto resultant_in = [&](int main_var, int one_var) {
            auto split = [&](const HomPoly& f, int dv) {
                std::vector<detail::UniPoly> coeffs(dv + 1);
                for (const auto& [e, c] : f.terms) {
                    auto& u = coeffs[e[var]];
                    if ((size_t)e[main_var] >= u.size()) u.resize(e[main_var] + 1, Rat(0));
                    u[e[main_var]] += c;
                }
                for (auto& u : coeffs) detail::uni_trim(u);
                return coeffs;
            };
            auto a = split(f2, da), b = split(f3, db);
            size_t n = da + db;
            std::vector<std::vector<detail::UniPoly>> syl(n, std::vector<detail::UniPoly>(n));
            for (int r = 0; r < db; ++r)
                for (int i = 0; i <= da; ++i) syl[r][r + i] = a[da - i];
            for (int r = 0; r < da; ++r)
                for (int i = 0; i <= db; ++i) syl[db + r][r + i] = b[db - i];
            (void)one_var;
            return detail::uni_det(syl);
        };
        detail::UniPoly r1 = resultant_in(o1, o2); // roots with X_o2 != 0
        detail::UniPoly r2 = resultant_in(o2, o1); // reversed coefficients
        if (r1.empty() && r2.empty())
            throw CommonComponent("resultant vanishes identically: common factor");

        TransversalityReport rep;
        rep.eliminated_var = var;
        int d1 = detail::uni_deg(r1);
        // order of vanishing of the binary form at the point X_o2 = 0
        int inf_ord = 0;
        while (inf_ord < (int)r2.size() && r2[inf_ord] == 0) ++inf_ord;
        rep.resultant_degree = d1 + inf_ord;
        detail::UniPoly g = detail::uni_gcd(r1, detail::uni_derivative(r1));
        int distinct_finite = d1 - detail::uni_deg(g);
        rep.distinct_roots = distinct_finite + (inf_ord > 0 ? 1 : 0);
        rep.squarefree = (detail::uni_deg(g) <= 0) && inf_ord <= 1;
        return rep;
    }
    throw CommonComponent("no valid elimination variable (degenerate leading coefficients)");
}

} // namespace k3

#endif
