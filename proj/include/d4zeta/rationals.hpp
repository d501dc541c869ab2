#pragma once

#include "padic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <vector>

namespace d4zeta {

/// Bernoulli numbers B_n from sum_{k<=n} C(n+1,k) B_k = 0 (so B_1 = -1/2),
/// behind a write-once cache shared across threads.
inline Rat bernoulli(std::size_t n) {
    static std::vector<Rat> cache{Rat(1)};
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while (cache.size() <= n) {
        std::size_t m = cache.size();
        // sum_{k=0}^{m} C(m+1,k) B_k = 0
        Rat acc(0);
        Int binom(1); // C(m+1,0)
        for (std::size_t k = 0; k < m; ++k) {
            acc += Rat(binom) * cache[k];
            binom = binom * Int(m + 1 - k) / Int(k + 1);
        }
        cache.push_back(-acc / Rat(binom));
    }
    return cache[n];
}

/// B_n(x) = sum_k C(n,k) B_k x^{n-k}, by Horner over the coefficient list.
inline Rat bernoulli_poly(std::size_t n, const Rat &x) {
    Rat acc(0);
    Int binom(1);
    std::vector<Rat> coef(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        coef[k] = Rat(binom) * bernoulli(k);
        binom = binom * Int(n - k) / Int(k + 1);
    }
    // sum coef[k] * x^{n-k} by Horner over k = 0..n
    acc = coef[0];
    for (std::size_t k = 1; k <= n; ++k)
        acc = acc * x + coef[k];
    return acc;
}

/// Kronecker symbol (a|n).
inline int kronecker(Int a, Int n) {
    if (n == 0)
        return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0)
            sign = -sign;
    }
    long e = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++e;
    }
    if (e > 0 && !is_odd(a))
        return 0;
    if (e % 2 == 1) {
        Int am = mod_pow2(a, 3);
        if (am == 3 || am == 5)
            sign = -sign;
    }
    a %= n;
    if (a < 0)
        a += n;
    while (a != 0) {
        long f = 0;
        while ((a & 1) == 0) {
            a >>= 1;
            ++f;
        }
        if (f % 2 == 1) {
            Int nm = mod_pow2(n, 3);
            if (nm == 3 || nm == 5)
                sign = -sign;
        }
        // quadratic reciprocity for odd positives
        if ((mod_pow2(a, 2) == 3) && (mod_pow2(n, 2) == 3))
            sign = -sign;
        std::swap(a, n);
        a %= n;
    }
    return (n == 1) ? sign : 0;
}

/**
 * Dirichlet character with values in the 4th roots of unity (or 0), stored
 * as a table over Z/modulus.  Codes: -1 for 0, else k with value i^k.
 */
class DirichletChar {
  public:
    DirichletChar() : modulus_(1), codes_{0} {}

    static DirichletChar trivial() { return DirichletChar(); }

    /// Quadratic character attached to a fundamental discriminant D.
    static DirichletChar kronecker_char(long D) {
        long m = std::abs(D);
        DirichletChar chi;
        chi.modulus_ = m;
        chi.codes_.assign(m == 0 ? 1 : m, -1);
        for (long a = 0; a < m; ++a) {
            int v = kronecker(Int(D), Int(a));
            chi.codes_[a] = (v == 0) ? -1 : (v == 1 ? 0 : 2);
        }
        return chi;
    }

    /// The sign character mod 4 (the 2-adic Teichmuller twist).
    static DirichletChar omega() { return kronecker_char(-4); }

    long modulus() const { return modulus_; }

    /// Value code at a: -1 if not coprime, else exponent of i.
    int code(const Int &a) const {
        Int r = a % modulus_;
        if (r < 0)
            r += modulus_;
        return codes_[static_cast<std::size_t>(r)];
    }

    bool is_zero_at(const Int &a) const { return code(a) < 0; }

    /// Real character value at a; throws if the value is imaginary.
    int value_real(const Int &a) const {
        int c = code(a);
        if (c < 0)
            return 0;
        if (c == 0)
            return 1;
        if (c == 2)
            return -1;
        throw std::domain_error("DirichletChar: value is not real");
    }

    bool is_even() const { return value_real(Int(-1)) == 1; }

    friend DirichletChar operator*(const DirichletChar &a, const DirichletChar &b) {
        long m = std::lcm(a.modulus_, b.modulus_);
        DirichletChar r;
        r.modulus_ = m;
        r.codes_.assign(m, -1);
        for (long x = 0; x < m; ++x) {
            int ca = a.codes_[x % a.modulus_];
            int cb = b.codes_[x % b.modulus_];
            r.codes_[x] = (ca < 0 || cb < 0) ? -1 : (ca + cb) % 4;
        }
        return r;
    }

    /// Smallest modulus the character factors through.
    long conductor() const {
        for (long f = 1; f <= modulus_; ++f) {
            if (modulus_ % f != 0)
                continue;
            if (factors_through(f))
                return f;
        }
        return modulus_;
    }

    /// The primitive character inducing this one.
    DirichletChar primitive_part() const {
        long f = conductor();
        DirichletChar r;
        r.modulus_ = f;
        r.codes_.assign(f, -1);
        for (long a = 0; a < f; ++a) {
            if (std::gcd(a, f) != 1) {
                r.codes_[a] = -1;
                continue;
            }
            // lift a to a residue coprime to modulus_
            long b = a;
            while (std::gcd(b, modulus_) != 1)
                b += f;
            r.codes_[a] = codes_[b % modulus_];
        }
        return r;
    }

    bool operator==(const DirichletChar &o) const {
        return modulus_ == o.modulus_ && codes_ == o.codes_;
    }

  private:
    bool factors_through(long f) const {
        // chi(a) = chi(b) whenever a = b mod f, both coprime to modulus
        for (long a = 0; a < modulus_; ++a) {
            if (codes_[a] < 0)
                continue;
            long b = a % f;
            while (std::gcd(b, modulus_) != 1)
                b += f;
            if (codes_[a] != codes_[static_cast<std::size_t>(b % modulus_)])
                return false;
        }
        return true;
    }

    long modulus_;
    std::vector<int> codes_;
};

/**
 * Generalized Bernoulli number B_{n,chi} = f^{n-1} sum_{a=1}^{f} chi(a) B_n(a/f),
 * taken at the character's own modulus.  Real-valued characters only.
 */
inline Rat gen_bernoulli(std::size_t n, const DirichletChar &chi) {
    if (n == 0)
        throw std::invalid_argument("gen_bernoulli: n >= 1 required");
    long f = chi.modulus();
    Rat acc(0);
    for (long a = 1; a <= f; ++a) {
        int v = chi.value_real(Int(a));
        if (v == 0)
            continue;
        Rat val = bernoulli_poly(n, Rat(a, f));
        acc += (v > 0) ? val : -val;
    }
    Rat scale(1);
    for (std::size_t i = 1; i < n; ++i)
        scale *= f;
    return scale * acc;
}

/**
 * Exact value of the S-truncated 2-adic abelian L-function at s = 1-n:
 *   L_{Q,S}(1-n, chi) = -(1 - chi_n(2) 2^{n-1}) prod_{p in S odd} (1 - chi_n(p) p^{n-1}) B_{n,chi_n}/n
 * with chi_n = chi * omega^n made primitive (the twist convention pinned by
 * the interpolation oracle).  chi must be even and primitive.
 */
inline Rat abelian_L_2adic_exact(std::size_t n, const DirichletChar &chi,
                                 const std::vector<long> &odd_S_primes) {
    if (n == 0)
        throw std::invalid_argument("abelian_L_2adic: n >= 1 required");
    if (!chi.is_even())
        throw std::domain_error("abelian_L_2adic: odd character");
    DirichletChar chi_n = (n % 2 == 1) ? (chi * DirichletChar::omega()).primitive_part()
                                       : chi.primitive_part();
    Rat value = -gen_bernoulli(n, chi_n) / Rat(n);
    // Euler factor at 2 removed per the 2-adic construction.
    Int p2 = int_pow(Int(2), n - 1);
    value *= Rat(1) - Rat(chi_n.value_real(Int(2))) * Rat(p2);
    for (long p : odd_S_primes) {
        Int pn = int_pow(Int(p), n - 1);
        value *= Rat(1) - Rat(chi_n.value_real(Int(p))) * Rat(pn);
    }
    return value;
}

/// 2-adic reduction of the exact L-value; requires 2-integrality.
inline PAdic abelian_L_2adic(std::size_t n, const DirichletChar &chi,
                             const std::vector<long> &odd_S_primes, long prec) {
    return PAdic::from_rational(abelian_L_2adic_exact(n, chi, odd_S_primes), prec);
}

} // namespace d4zeta
