#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace walkbij {

// All counting is done in exact arbitrary-precision integers; ratios (ballot
// probabilities) in exact rationals.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k), zero outside 0 <= k <= n.
inline BigInt binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact: r is C(n-k+i, i) after this step
    }
    return r;
}

inline BigInt ipow(BigInt base, unsigned exp) {
    BigInt r = 1;
    while (exp != 0) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

} // namespace walkbij
