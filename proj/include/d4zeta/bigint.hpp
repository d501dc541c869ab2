#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace d4zeta {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat &r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat &r) { return boost::multiprecision::denominator(r); }

inline bool is_odd(const Int &n) { return (n % 2) != 0; }

/// 2-adic valuation of a nonzero integer.
inline long v2(const Int &n) {
    if (n == 0)
        throw std::domain_error("v2(0) undefined");
    return static_cast<long>(boost::multiprecision::lsb(boost::multiprecision::abs(n)));
}

/// 2-adic valuation of a nonzero rational (may be negative).
inline long v2(const Rat &r) {
    if (r == 0)
        throw std::domain_error("v2(0) undefined");
    return v2(rat_num(r)) - v2(rat_den(r));
}

inline Int pow2(long k) {
    if (k < 0)
        throw std::domain_error("pow2: negative exponent");
    Int one(1);
    return one << static_cast<unsigned>(k);
}

/// Reduce n into [0, 2^bits).
inline Int mod_pow2(const Int &n, long bits) {
    Int p = pow2(bits);
    Int m = n % p;
    if (m < 0)
        m += p;
    return m;
}

/// Inverse of an odd integer modulo 2^bits (Newton lifting).
inline Int inv_mod_pow2(const Int &a, long bits) {
    if (!is_odd(a))
        throw std::domain_error("inv_mod_pow2: even argument");
    Int x(1); // inverse mod 2
    for (long k = 1; k < bits; k *= 2) {
        long cur = std::min(2 * k, bits);
        x = mod_pow2(x * (2 - mod_pow2(a * x, cur)), cur);
    }
    return mod_pow2(x, bits);
}

inline Int int_gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

inline Int int_pow(Int base, unsigned long e) {
    Int r(1);
    while (e) {
        if (e & 1)
            r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline long isqrt_long(long n) {
    long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

inline bool is_square(const Int &n, Int *root = nullptr) {
    if (n < 0)
        return false;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r == n) {
        if (root)
            *root = r;
        return true;
    }
    return false;
}

inline bool is_squarefree(long n) {
    if (n <= 0)
        return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % (p * p) == 0)
            return false;
    return true;
}

} // namespace d4zeta
