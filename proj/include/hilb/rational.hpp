#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hilb {

// Exact arbitrary-precision arithmetic. Rationals are kept normalized
// (reduced fraction, positive denominator) by the backend.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;  // exact: product of j consecutive integers is divisible by j!
    }
    return r;
}

inline Int int_pow(Int base, int exp) {
    Int r = 1;
    while (exp > 0) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

// Canonical text form: "7", "-7", "2/3", "-2/3".
inline std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += '/';
        s += denominator(q).str();
    }
    return s;
}

}  // namespace hilb
