#pragma once

#include "bigint.hpp"

#include <limits>
#include <optional>
#include <string>

namespace d4zeta {

/// Sentinel for "valuation of (exact) zero".
inline constexpr long kValInfinity = std::numeric_limits<long>::max();

/**
 * Element of Z_2 known modulo 2^prec.
 *
 * The residue is kept normalized in [0, 2^prec).  An exact zero (used for
 * the <.> = 0 extension at even arguments and for exact constants) carries
 * the infinite-valuation flag and behaves as 0 at every precision.
 *
 * Arithmetic follows the min-precision contract: results carry the minimum
 * of the operand precisions, and dividing by 2^k costs exactly k bits.
 */
class PAdic {
  public:
    PAdic() : residue_(0), prec_(0), exact_zero_(true) {}

    PAdic(const Int &value, long prec_bits)
        : residue_(mod_pow2(value, check_prec(prec_bits))), prec_(prec_bits), exact_zero_(false) {}

    PAdic(long value, long prec_bits) : PAdic(Int(value), prec_bits) {}

    static PAdic exact_zero() { return PAdic(); }

    static PAdic one(long prec_bits) { return PAdic(Int(1), prec_bits); }

    /// Reduction of an exact rational with odd denominator.
    static PAdic from_rational(const Rat &r, long prec_bits) {
        Int den = rat_den(r);
        if ((den & 1) == 0)
            throw std::domain_error("PAdic::from_rational: not 2-integral");
        if (r == 0)
            return PAdic(Int(0), prec_bits);
        Int num = rat_num(r);
        return PAdic(mod_pow2(num, prec_bits) * inv_mod_pow2(den, prec_bits), prec_bits);
    }

    bool is_exact_zero() const { return exact_zero_; }
    const Int &residue() const { return residue_; }
    long precision() const { return exact_zero_ ? kValInfinity : prec_; }

    /// Known valuation: exact for nonzero residues, prec as a lower bound
    /// for a residue that is zero to working precision.
    long valuation() const {
        if (exact_zero_)
            return kValInfinity;
        if (residue_ == 0)
            return prec_;
        return v2(residue_);
    }

    bool is_unit() const { return !exact_zero_ && (residue_ & 1) == 1; }

    /// True when the value is 0 mod 2^bits (within known precision).
    bool is_zero_mod(long bits) const {
        if (exact_zero_)
            return true;
        if (bits > prec_)
            throw std::domain_error("is_zero_mod: insufficient precision");
        return mod_pow2(residue_, bits) == 0;
    }

    Int residue_mod(long bits) const {
        if (exact_zero_)
            return Int(0);
        if (bits > prec_)
            throw std::domain_error("residue_mod: insufficient precision");
        return mod_pow2(residue_, bits);
    }

    PAdic truncated(long bits) const {
        if (exact_zero_)
            return *this;
        return PAdic(residue_, std::min(bits, prec_));
    }

    PAdic operator-() const {
        if (exact_zero_)
            return *this;
        return PAdic(-residue_, prec_);
    }

    friend PAdic operator+(const PAdic &a, const PAdic &b) {
        if (a.exact_zero_)
            return b;
        if (b.exact_zero_)
            return a;
        long p = std::min(a.prec_, b.prec_);
        return PAdic(a.residue_ + b.residue_, p);
    }

    friend PAdic operator-(const PAdic &a, const PAdic &b) { return a + (-b); }

    friend PAdic operator*(const PAdic &a, const PAdic &b) {
        if (a.exact_zero_ || b.exact_zero_)
            return exact_zero();
        long p = std::min(a.prec_, b.prec_);
        return PAdic(a.residue_ * b.residue_, p);
    }

    /// Multiplication by an exact integer: n*x is known mod 2^{prec + v2(n)}.
    friend PAdic operator*(const Int &n, const PAdic &a) {
        if (a.exact_zero_ || n == 0)
            return exact_zero();
        return PAdic(n * a.residue_, a.prec_ + v2(n));
    }

    PAdic &operator+=(const PAdic &o) { return *this = *this + o; }
    PAdic &operator-=(const PAdic &o) { return *this = *this - o; }
    PAdic &operator*=(const PAdic &o) { return *this = *this * o; }

    /// Divide by 2^k; requires the known residue to be divisible by 2^k.
    PAdic div_pow2(long k) const {
        if (k == 0 || exact_zero_)
            return *this;
        if (k < 0)
            throw std::domain_error("div_pow2: negative shift");
        if (prec_ <= k)
            throw std::domain_error("div_pow2: precision exhausted");
        if (mod_pow2(residue_, k) != 0)
            throw std::domain_error("div_pow2: value not divisible by 2^" + std::to_string(k));
        return PAdic(residue_ >> static_cast<unsigned>(k), prec_ - k);
    }

    /// Divide by a unit (odd) value.
    PAdic div_unit(const PAdic &b) const {
        if (!b.is_unit())
            throw std::domain_error("div_unit: divisor is not a 2-adic unit");
        if (exact_zero_)
            return *this;
        long p = std::min(prec_, b.prec_);
        return PAdic(residue_ * inv_mod_pow2(b.residue_, p), p);
    }

    /// General division: strips the divisor's 2-power first.
    PAdic div(const PAdic &b) const {
        if (b.exact_zero_)
            throw std::domain_error("div: division by zero");
        long w = b.valuation();
        if (w >= b.precision())
            throw std::domain_error("div: divisor is zero to working precision");
        PAdic unit_part(b.residue_ >> static_cast<unsigned>(w), b.prec_ - w);
        return div_pow2(w).div_unit(unit_part);
    }

    /// Congruence mod 2^bits, requiring both operands to know that many bits.
    friend bool congruent(const PAdic &a, const PAdic &b, long bits) {
        return (a - b).is_zero_mod(bits);
    }

    std::string str() const {
        if (exact_zero_)
            return "0 (exact)";
        return residue_.str() + " + O(2^" + std::to_string(prec_) + ")";
    }

  private:
    static long check_prec(long p) {
        if (p <= 0)
            throw std::invalid_argument("PAdic: precision must be positive");
        return p;
    }

    Int residue_;
    long prec_;
    bool exact_zero_;
};

/// <x> and sign: the unique factorization x = sign * angle with angle in 1+4Z_2,
/// sign in {+1,-1}, for odd x.  Even x maps to (exact zero, +1) per the
/// <x> = 0 extension.
struct AngleSign {
    PAdic angle;
    int sign;
};

inline AngleSign decompose(const PAdic &x) {
    if (!x.is_unit())
        throw std::domain_error("not a 2-adic unit");
    if (x.precision() < 3)
        throw std::domain_error("decompose: need precision >= 3");
    if ((x.residue() & 3) == 1)
        return {x, +1};
    return {-x, -1};
}

/// <x> as a value; even x gives the distinguished zero.
inline PAdic angle_part(const PAdic &x) {
    if (x.is_exact_zero() || !x.is_unit())
        return PAdic::exact_zero();
    return decompose(x).angle;
}

/// <n> of an exact integer, returned as an exact integer (+-n).
inline Int angle_of_integer(const Int &n) {
    if (!is_odd(n))
        throw std::domain_error("angle_of_integer: even argument");
    Int m = mod_pow2(n, 2);
    return (m == 1) ? n : -n;
}

namespace detail {

/// log(1+t) for v2(t) >= 2 by the alternating series, with certified tail.
/// Term t^n/n has valuation >= 2n - v2(n) which is increasing; we stop when
/// it clears the working precision.
inline PAdic log_one_plus(const PAdic &t, long out_prec) {
    if (t.is_exact_zero())
        return PAdic(Int(0), out_prec);
    if (t.valuation() < 2)
        throw std::domain_error("log_one_plus: needs v2 >= 2");
    long work = t.precision();
    PAdic acc(Int(0), work);
    PAdic power = t; // t^n
    for (long n = 1;; ++n) {
        long tail_val = 2 * (n + 1) - v2(Int(n + 1));
        PAdic term = power.div_pow2(0); // copy
        // divide by n: odd part exactly, 2-part with the documented loss
        long k = v2(Int(n));
        Int odd = Int(n) >> static_cast<unsigned>(k);
        term = term.div_unit(PAdic(odd, work));
        if (k > 0)
            term = term.div_pow2(k);
        if (n % 2 == 0)
            term = -term;
        acc += term;
        if (tail_val >= out_prec && 2 * (n + 1) >= out_prec)
            break;
        power *= t;
        if (power.valuation() >= work)
            break;
    }
    return acc.truncated(out_prec);
}

} // namespace detail

/**
 * Iwasawa logarithm on Z_2 units: log(x) := log<x> (so log(-1) = 0), by the
 * series on the principal unit <x>^2's square root trick avoided -- for odd x,
 * <x> is in 1+4Z_2 already and the series applies directly.
 */
inline PAdic iwasawa_log(const PAdic &x) {
    if (!x.is_unit())
        throw std::domain_error("iwasawa_log: not a unit");
    PAdic a = angle_part(x);
    long out = a.precision() - 1; // one guard bit for the series tail
    if (out < 3)
        throw std::domain_error("iwasawa_log: insufficient precision");
    return detail::log_one_plus(a - PAdic::one(a.precision()), out);
}

/// L(x) = log<x>/log(u) for a fixed u = 5 mod 8 (so v2(log u) = 2).
inline PAdic curlyL(const PAdic &x, const PAdic &u) {
    if (u.residue_mod(3) != 5)
        throw std::domain_error("curlyL: u must be 5 mod 8");
    if (x.is_exact_zero() || !x.is_unit())
        throw std::domain_error("curlyL: x must be a 2-adic unit");
    PAdic lx = iwasawa_log(x);
    PAdic lu = iwasawa_log(u);
    return lx.div(lu);
}

/**
 * Square root of d = (unit = 1 mod 8) * 4^k by Hensel lifting, normalized so
 * the root of the unit part is = 1 mod 4.
 */
inline PAdic hensel_sqrt(const PAdic &d) {
    if (d.is_exact_zero())
        throw std::domain_error("hensel_sqrt: zero input");
    long w = d.valuation();
    if (w >= d.precision())
        throw std::domain_error("hensel_sqrt: zero to working precision");
    if (w % 2 != 0)
        throw std::domain_error("hensel_sqrt: odd valuation, not a square");
    PAdic unit = d.div_pow2(w);
    if (unit.residue_mod(3) != 1)
        throw std::domain_error("hensel_sqrt: unit part is not 1 mod 8, not a square");
    long prec = unit.precision();
    // r known mod 2^k determines the root mod 2^{k-1}; lift bit by bit.
    Int u = unit.residue();
    Int r(1);
    for (long k = 3; k < prec; ++k) {
        // r^2 = u mod 2^k holds; adjust bit k-1 to extend mod 2^{k+1}.
        Int err = mod_pow2(u - r * r, k + 1);
        if (err != 0)
            r += pow2(k - 1);
    }
    if (mod_pow2(r * r, prec) != mod_pow2(u, prec))
        throw std::domain_error("hensel_sqrt: lift failed");
    if ((r & 3) != 1)
        r = mod_pow2(-r, prec);
    PAdic root(r, prec - 1);
    for (long i = 0; i < w / 2; ++i)
        root = Int(2) * root;
    return root;
}

/**
 * Element of Q_2(i), i^2 = -1, as re + im*i with both parts tracked mod 2^M.
 */
class PAdicGaussian {
  public:
    PAdicGaussian() = default;
    PAdicGaussian(PAdic re, PAdic im) : re_(std::move(re)), im_(std::move(im)) {}

    static PAdicGaussian zero() { return {PAdic::exact_zero(), PAdic::exact_zero()}; }
    static PAdicGaussian one(long prec) { return {PAdic::one(prec), PAdic::exact_zero()}; }
    static PAdicGaussian i_unit(long prec) { return {PAdic::exact_zero(), PAdic::one(prec)}; }

    /// i^k for k mod 4.
    static PAdicGaussian i_power(int k, long prec) {
        switch (((k % 4) + 4) % 4) {
        case 0: return one(prec);
        case 1: return i_unit(prec);
        case 2: return {-PAdic::one(prec), PAdic::exact_zero()};
        default: return {PAdic::exact_zero(), -PAdic::one(prec)};
        }
    }

    const PAdic &re() const { return re_; }
    const PAdic &im() const { return im_; }

    bool is_real(long bits) const { return im_.is_zero_mod(bits); }

    PAdicGaussian conj() const { return {re_, -im_}; }

    PAdic norm() const { return re_ * re_ + im_ * im_; }

    PAdicGaussian operator-() const { return {-re_, -im_}; }

    friend PAdicGaussian operator+(const PAdicGaussian &a, const PAdicGaussian &b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend PAdicGaussian operator-(const PAdicGaussian &a, const PAdicGaussian &b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend PAdicGaussian operator*(const PAdicGaussian &a, const PAdicGaussian &b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    PAdicGaussian &operator+=(const PAdicGaussian &o) { return *this = *this + o; }
    PAdicGaussian &operator-=(const PAdicGaussian &o) { return *this = *this - o; }
    PAdicGaussian &operator*=(const PAdicGaussian &o) { return *this = *this * o; }

    /// Division by a value whose norm is odd.
    PAdicGaussian div_unit(const PAdicGaussian &b) const {
        PAdic n = b.norm();
        if (!n.is_unit())
            throw std::domain_error("PAdicGaussian::div_unit: norm is not a unit");
        PAdicGaussian num = *this * b.conj();
        return {num.re_.div_unit(n), num.im_.div_unit(n)};
    }

    long min_precision() const {
        return std::min(re_.precision(), im_.precision());
    }

    std::string str() const { return "(" + re_.str() + ") + (" + im_.str() + ")*i"; }

  private:
    PAdic re_, im_;
};

} // namespace d4zeta
