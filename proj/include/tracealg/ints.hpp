#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tracealg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int binomial(long n, long k) {
    // Generalized binomial C(n,k) for integer n (possibly negative), k >= 0.
    if (k < 0) return 0;
    Int num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= Int(n - i);
        den *= Int(i + 1);
    }
    return num / den;
}

inline Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

} // namespace tracealg
