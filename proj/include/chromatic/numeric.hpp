#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "chromatic/errors.hpp"

namespace chromatic {

// All arithmetic in this library is exact.  Integer is an
// arbitrary-precision signed integer, Rational an exact fraction.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(long long n) {
    Integer r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

// C(n, k) for n >= 0; zero outside 0 <= k <= n.
inline Integer binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (long long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1; // divides exactly at every step
    }
    return r;
}

// Falling power (x)_m = x(x-1)...(x-m+1), with (x)_0 = 1.
inline Integer falling_power(const Integer& x, long long m) {
    Integer r = 1;
    for (long long i = 0; i < m; ++i) r *= x - i;
    return r;
}

// x^e for e >= 0; 0^0 = 1.
inline Integer int_pow(const Integer& x, long long e) {
    Integer r = 1, b = x;
    for (; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

// Quotient a/b, throwing if b does not divide a.
inline Integer exact_div(const Integer& a, const Integer& b) {
    Integer q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0)
        throw nondivisible("exact_div: " + a.str() + " not divisible by " + b.str());
    return q;
}

} // namespace chromatic
