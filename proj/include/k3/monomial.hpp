#ifndef K3_MONOMIAL_HPP
#define K3_MONOMIAL_HPP

// Correspondence between weighted-degree-6 monomials X^a Y^b Z^c W^d in
// weights (1,1,1,3) and lattice points of the rank-3 lattice
//   M = { (a0,a1,a2,a3) in Z^4 : a0 + a1 + a2 + 3 a3 == 0 (mod 6) }
// expressed in the basis e1 = (1,0,-1,0), e2 = (0,1,-1,0), e3 = (0,0,-3,1).

#include <array>
#include <string>
#include <vector>

#include "numeric.hpp"
#include "polytope.hpp"

namespace k3 {

struct NotInLattice : ComputationError {
    using ComputationError::ComputationError;
};
struct NegativeExponent : InputError {
    using InputError::InputError;
};

// Exponent quadruple (a,b,c,d) of X^a Y^b Z^c W^d.
struct WeightedMonomial {
    std::array<Int, 4> exp;

    Int weighted_degree() const { return exp[0] + exp[1] + exp[2] + 3 * exp[3]; }

    bool operator==(const WeightedMonomial&) const = default;
    auto operator<=>(const WeightedMonomial&) const = default;

    std::string str() const {
        static const char* names[4] = {"X", "Y", "Z", "W"};
        std::string s;
        for (int i = 0; i < 4; ++i) {
            if (exp[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += names[i];
            if (exp[i] != 1) s += "^" + exp[i].str();
        }
        return s.empty() ? "1" : s;
    }
};

// Integer quadruple subject to the mod-6 congruence.
struct MLatticeVector {
    std::array<Int, 4> raw;

    bool in_lattice() const {
        return reduce_mod(Rat(raw[0] + raw[1] + raw[2] + 3 * raw[3]), 6) == 0;
    }
};

inline const std::array<MLatticeVector, 3> m_basis = {
    MLatticeVector{{Int(1), Int(0), Int(-1), Int(0)}},
    MLatticeVector{{Int(0), Int(1), Int(-1), Int(0)}},
    MLatticeVector{{Int(0), Int(0), Int(-3), Int(1)}},
};

// Solve raw = x*e1 + y*e2 + z*e3 exactly; throws NotInLattice when inconsistent.
inline LatticePoint lattice_vector_to_point(const MLatticeVector& v) {
    if (!v.in_lattice())
        throw NotInLattice("quadruple fails the mod-6 congruence: (" + v.raw[0].str() + "," +
                           v.raw[1].str() + "," + v.raw[2].str() + "," + v.raw[3].str() + ")");
    // From the basis shape: x = raw0, y = raw1, z = raw3; consistency in slot 2.
    Int x = v.raw[0], y = v.raw[1], z = v.raw[3];
    if (v.raw[2] != -x - y - 3 * z)
        throw NotInLattice("quadruple is not an integer combination of e1,e2,e3");
    return LatticePoint{x, y, z};
}

inline MLatticeVector point_to_lattice_vector(const LatticePoint& p) {
    MLatticeVector v{};
    for (int i = 0; i < 4; ++i) v.raw[i] = 0;
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 4; ++i) v.raw[i] += p[j] * m_basis[j].raw[i];
    return v;
}

inline LatticePoint monomial_to_point(const WeightedMonomial& m) {
    if (m.weighted_degree() != 6)
        throw InputError("monomial " + m.str() + " does not have weighted degree 6");
    MLatticeVector v{{m.exp[0] - 1, m.exp[1] - 1, m.exp[2] - 1, m.exp[3] - 1}};
    return lattice_vector_to_point(v);
}

inline WeightedMonomial point_to_monomial(const LatticePoint& p) {
    MLatticeVector v = point_to_lattice_vector(p);
    WeightedMonomial m{{v.raw[0] + 1, v.raw[1] + 1, v.raw[2] + 1, v.raw[3] + 1}};
    for (int i = 0; i < 4; ++i)
        if (m.exp[i] < 0)
            throw NegativeExponent("point " + p.str() + " corresponds to exponent " +
                                   m.exp[i].str() + " in slot " + std::to_string(i));
    if (m.weighted_degree() != 6)
        throw ComputationError("round-trip degree check failed for " + p.str());
    return m;
}

// All monomials of weighted degree 6 in weights (1,1,1,3), lexicographic in (a,b,c,d).
inline std::vector<WeightedMonomial> enumerate_degree6_monomials() {
    std::vector<WeightedMonomial> out;
    for (Int d = 0; d <= 2; ++d)
        for (Int a = 0; a + 3 * d <= 6; ++a)
            for (Int b = 0; a + b + 3 * d <= 6; ++b)
                out.push_back(WeightedMonomial{{a, b, 6 - a - b - 3 * d, d}});
    return out;
}

// Parse e.g. "X^2*Z^4", "Y^3Z^3", "W^2"; '*' separators optional, case-sensitive.
inline WeightedMonomial parse_monomial(const std::string& s) {
    WeightedMonomial m{{Int(0), Int(0), Int(0), Int(0)}};
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && (s[i] == ' ' || s[i] == '*')) ++i; };
    skip_ws();
    if (i >= s.size()) throw InputError("empty monomial");
    if (s[i] == '1' && i + 1 == s.size()) return m;
    while (i < s.size()) {
        int slot;
        switch (s[i]) {
            case 'X': slot = 0; break;
            case 'Y': slot = 1; break;
            case 'Z': slot = 2; break;
            case 'W': slot = 3; break;
            default: throw InputError(std::string("unexpected character '") + s[i] + "' in monomial");
        }
        ++i;
        Int e = 1;
        if (i < s.size() && (s[i] == '^' || isdigit(static_cast<unsigned char>(s[i])))) {
            if (s[i] == '^') {
                ++i;
                if (i >= s.size() || !isdigit(static_cast<unsigned char>(s[i])))
                    throw InputError("missing exponent after '^'");
            }
            std::string digits;
            while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
            e = Int(digits);
        }
        m.exp[slot] += e;
        skip_ws();
    }
    return m;
}

} // namespace k3

#endif
