#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace latpoly {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline double to_double(const BigInt& x) { return x.convert_to<double>(); }
inline double to_double(const BigRat& x) { return x.convert_to<double>(); }

// Exact binomial coefficient; intermediate divisions are always exact.
inline BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt c = 1;
    for (long long i = 1; i <= k; ++i) {
        c *= (n - k + i);
        c /= i;
    }
    return c;
}

inline BigInt bigint_pow(BigInt base, unsigned e) {
    BigInt r = 1;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

}  // namespace latpoly
