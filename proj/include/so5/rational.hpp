#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace so5 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int ipow(Int base, unsigned e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// q^e with e of either sign, as an exact rational.
inline Rat qpow(long long q, long e) {
    if (e >= 0) return Rat(ipow(Int(q), static_cast<unsigned>(e)));
    return Rat(1, ipow(Int(q), static_cast<unsigned>(-e)));
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline std::string to_string(const Rat& r) { return r.str(); }

} // namespace so5
