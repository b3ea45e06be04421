#ifndef K3_NUMERIC_HPP
#define K3_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <stdexcept>
#include <string>

namespace k3 {

// All arithmetic in this library is exact. Int/Rat never overflow and never round.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline int sign(const Int& a) { return a.sign(); }
inline int sign(const Rat& a) { return a.sign(); }

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

// floor division for Int (cpp_int division truncates toward zero)
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

// canonical representative of r mod m in [0, m), m > 0
inline Rat reduce_mod(const Rat& r, const Int& m) {
    Int fl = floor_div(num(r), den(r) * m);
    return r - Rat(fl * m);
}

struct ComputationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace k3

#endif
