#ifndef K3_POLYNOMIAL_HPP
#define K3_POLYNOMIAL_HPP

// Exact polynomial arithmetic for torus-type sextics:
//  - ParamPoly: polynomials over Q in X, Y, Z and the parameters t1..t5, s,
//    with a recursive-descent parser for strings like
//    "-(t1+t2-s-1)*Y^3 + 2*(t1+t2-s-1)*X*Y^2 - 23/27*X^3".
//  - HomPoly: homogeneous polynomials in X, Y, Z after parameter substitution.

#include <array>
#include <map>
#include <optional>
#include <string>

#include "numeric.hpp"

namespace k3 {

struct DegreeMismatch : InputError {
    using InputError::InputError;
};

// variable order: X Y Z t1 t2 t3 t4 t5 s
inline const std::array<std::string, 9> poly_var_names = {"X", "Y", "Z", "t1", "t2",
                                                          "t3", "t4", "t5", "s"};

using ParamExp = std::array<int, 9>;
using ParamPoly = std::map<ParamExp, Rat>;

// exponents (a,b,c) of X^a Y^b Z^c
using HomExp = std::array<int, 3>;

struct HomPoly {
    std::map<HomExp, Rat> terms;
    int degree = 0;

    bool operator==(const HomPoly&) const = default;
};

// ---- ParamPoly arithmetic ----

inline void ppoly_add_term(ParamPoly& p, const ParamExp& e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = p.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

inline ParamPoly ppoly_const(const Rat& c) {
    ParamPoly p;
    ppoly_add_term(p, ParamExp{}, c);
    return p;
}

inline ParamPoly ppoly_var(size_t i) {
    ParamPoly p;
    ParamExp e{};
    e[i] = 1;
    ppoly_add_term(p, e, 1);
    return p;
}

inline ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r = a;
    for (const auto& [e, c] : b) ppoly_add_term(r, e, c);
    return r;
}

inline ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r = a;
    for (const auto& [e, c] : b) ppoly_add_term(r, e, -c);
    return r;
}

inline ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            ParamExp e;
            for (size_t i = 0; i < 9; ++i) e[i] = ea[i] + eb[i];
            ppoly_add_term(r, e, ca * cb);
        }
    return r;
}

inline ParamPoly ppoly_pow(const ParamPoly& a, int n) {
    ParamPoly r = ppoly_const(1);
    for (int i = 0; i < n; ++i) r = r * a;
    return r;
}

// ---- parser ----

namespace detail {

class PolyParser {
public:
    explicit PolyParser(const std::string& s) : s_(s) {}

    ParamPoly parse() {
        ParamPoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing characters");
        return p;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw InputError("polynomial parse error at position " + std::to_string(pos_) + ": " + what);
    }
    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n')) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    ParamPoly expr() {
        ParamPoly p = eat('-') ? ppoly_const(0) - term() : (eat('+'), term());
        while (true) {
            if (eat('+')) p = p + term();
            else if (eat('-')) p = p - term();
            else return p;
        }
    }

    ParamPoly term() {
        ParamPoly p = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                p = p * factor();
            } else if (c == '/') {
                ++pos_;
                ParamPoly d = factor();
                // division only by a nonzero constant
                if (d.size() != 1 || d.begin()->first != ParamExp{} || d.begin()->second == 0)
                    fail("division is only supported by nonzero constants");
                p = p * ppoly_const(Rat(1) / d.begin()->second);
            } else if (c == '(' || isalpha(static_cast<unsigned char>(c))) {
                p = p * factor(); // juxtaposition
            } else {
                return p;
            }
        }
    }

    ParamPoly factor() {
        if (eat('-')) return ppoly_const(0) - factor();
        ParamPoly base = atom();
        if (eat('^')) {
            skip_ws();
            if (pos_ >= s_.size() || !isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected exponent");
            int n = 0;
            while (pos_ < s_.size() && isdigit(static_cast<unsigned char>(s_[pos_]))) n = n * 10 + (s_[pos_++] - '0');
            return ppoly_pow(base, n);
        }
        return base;
    }

    ParamPoly atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            ParamPoly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (isdigit(static_cast<unsigned char>(c))) {
            Int numv = read_int();
            if (eat('/')) {
                skip_ws();
                if (pos_ >= s_.size() || !isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected denominator");
                Int denv = read_int();
                return ppoly_const(Rat(numv, denv));
            }
            return ppoly_const(Rat(numv));
        }
        if (isalpha(static_cast<unsigned char>(c))) {
            std::string name(1, c);
            ++pos_;
            while (pos_ < s_.size() && isdigit(static_cast<unsigned char>(s_[pos_]))) name += s_[pos_++];
            for (size_t i = 0; i < poly_var_names.size(); ++i)
                if (poly_var_names[i] == name) return ppoly_var(i);
            fail("unknown symbol '" + name + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Int read_int() {
        std::string digits;
        while (pos_ < s_.size() && isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
        return Int(digits);
    }
};

} // namespace detail

inline ParamPoly parse_poly(const std::string& s) { return detail::PolyParser(s).parse(); }

// substitute rational values for parameters; every parameter occurring in p
// must be assigned
inline ParamPoly substitute_params(const ParamPoly& p, const std::map<std::string, Rat>& values) {
    std::array<std::optional<Rat>, 9> val;
    for (const auto& [name, v] : values) {
        bool found = false;
        for (size_t i = 3; i < 9; ++i)
            if (poly_var_names[i] == name) {
                val[i] = v;
                found = true;
            }
        if (!found) throw InputError("unknown parameter '" + name + "'");
    }
    ParamPoly out;
    for (const auto& [e, c] : p) {
        Rat coeff = c;
        ParamExp ne = e;
        for (size_t i = 3; i < 9; ++i) {
            if (e[i] == 0) continue;
            if (!val[i]) throw InputError("parameter '" + poly_var_names[i] + "' not assigned");
            for (int k = 0; k < e[i]; ++k) coeff *= *val[i];
            ne[i] = 0;
        }
        ppoly_add_term(out, ne, coeff);
    }
    return out;
}

// convert a parameter-free ParamPoly to a HomPoly of the stated degree
inline HomPoly to_hom_poly(const ParamPoly& p, int degree) {
    HomPoly h;
    h.degree = degree;
    for (const auto& [e, c] : p) {
        for (size_t i = 3; i < 9; ++i)
            if (e[i] != 0) throw InputError("polynomial still contains parameter " + poly_var_names[i]);
        if (e[0] + e[1] + e[2] != degree)
            throw DegreeMismatch("term of degree " + std::to_string(e[0] + e[1] + e[2]) +
                                 " in a polynomial declared homogeneous of degree " +
                                 std::to_string(degree));
        h.terms[{e[0], e[1], e[2]}] = c;
    }
    return h;
}

inline std::string rat_str(const Rat& r) {
    return is_integer(r) ? num(r).str() : num(r).str() + "/" + den(r).str();
}

inline std::string hom_poly_str(const HomPoly& h) {
    if (h.terms.empty()) return "0";
    std::string out;
    // print highest X-power first for readability
    for (auto it = h.terms.rbegin(); it != h.terms.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        const char* names[3] = {"X", "Y", "Z"};
        for (int i = 0; i < 3; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        Rat a = c;
        std::string sgn = a < 0 ? " - " : (out.empty() ? "" : " + ");
        if (a < 0) a = -a;
        std::string cs = (a == 1 && !mono.empty()) ? "" : rat_str(a);
        out += sgn + cs + ((cs.empty() || mono.empty()) ? "" : "*") + mono;
        if (mono.empty() && cs.empty()) out += "1";
    }
    return out;
}

} // namespace k3

#endif
