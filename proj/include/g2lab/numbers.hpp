#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace g2lab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }
inline double to_double(const Int& n) { return n.convert_to<double>(); }

// floor division for arbitrary-precision integers (truncation in cpp_int is toward zero)
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

// reduce to [0,1)
inline Rat mod1(const Rat& r) {
    Int n = boost::multiprecision::numerator(r);
    Int d = boost::multiprecision::denominator(r);
    Int q = floor_div(n, d);
    return r - Rat(q);
}

}  // namespace g2lab
