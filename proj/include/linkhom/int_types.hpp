#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace linkhom {

// Exact arithmetic throughout: weight/degree products blow past 64 bits
// quickly once the subset sums involve more than a handful of indices.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Int lcm(const Int& a, const Int& b) {
    return boost::multiprecision::lcm(a, b);
}

inline Int gcd_all(const std::vector<Int>& xs) {
    Int g = 0;
    for (const Int& x : xs) g = gcd(g, x);
    return g;
}

inline Int lcm_all(const std::vector<Int>& xs) {
    Int l = 1;
    for (const Int& x : xs) l = lcm(l, x);
    return l;
}

// floor(num/den) for den > 0; exact for negative numerators as well.
inline Int floor_div(const Int& num, const Int& den) {
    Int q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0 && num < 0) --q;
    return q;
}

inline Int rational_floor(const Rational& x) {
    return floor_div(numerator(x), denominator(x));
}

}  // namespace linkhom
