#pragma once

#include "padic.hpp"

#include <vector>

namespace d4zeta {

inline long coeff_precision(const PAdic &c) { return c.precision(); }
inline long coeff_precision(const PAdicGaussian &c) { return c.min_precision(); }

inline bool coeff_zero_mod(const PAdic &c, long bits) { return c.is_zero_mod(bits); }
inline bool coeff_zero_mod(const PAdicGaussian &c, long bits) {
    return c.re().is_zero_mod(bits) && c.im().is_zero_mod(bits);
}

inline PAdic coeff_div_unit(const PAdic &a, const PAdic &b) { return a.div_unit(b); }
inline PAdicGaussian coeff_div_unit(const PAdicGaussian &a, const PAdicGaussian &b) {
    return a.div_unit(b);
}

/// Divide by an exact nonzero integer; the 2-power part must divide exactly.
inline PAdic div_exact_int(const PAdic &a, const Int &n) {
    if (n == 0)
        throw std::domain_error("div_exact_int: zero divisor");
    long k = v2(n);
    Int odd = (n < 0 ? -n : n) >> static_cast<unsigned>(k);
    PAdic r = a.div_pow2(k).div_unit(PAdic(odd, std::max<long>(a.precision() - k, 1)));
    return (n < 0) ? -r : r;
}

/**
 * Truncated power series over 2-adic coefficients: Z_2[[T]] mod (T^N, 2^M).
 * Index j holds the coefficient of T^j.  The certified precision is the
 * minimum of the per-coefficient precisions (exact zeros do not count).
 */
template <typename C> class TruncSeries {
  public:
    TruncSeries() = default;
    explicit TruncSeries(std::size_t len) : c_(len) {}
    explicit TruncSeries(std::vector<C> coeffs) : c_(std::move(coeffs)) {}

    static TruncSeries constant(C v, std::size_t len) {
        TruncSeries s(len);
        if (len == 0)
            throw std::invalid_argument("TruncSeries: zero length");
        s.c_[0] = std::move(v);
        return s;
    }

    std::size_t length() const { return c_.size(); }
    const C &operator[](std::size_t j) const { return c_.at(j); }
    C &operator[](std::size_t j) { return c_.at(j); }
    const std::vector<C> &coeffs() const { return c_; }

    long certified_precision() const {
        long m = kValInfinity;
        for (const auto &c : c_)
            m = std::min(m, coeff_precision(c));
        return m;
    }

    TruncSeries operator-() const {
        TruncSeries r(*this);
        for (auto &c : r.c_)
            c = -c;
        return r;
    }

    friend TruncSeries operator+(const TruncSeries &a, const TruncSeries &b) {
        check_lengths(a, b);
        TruncSeries r(a.length());
        for (std::size_t j = 0; j < a.length(); ++j)
            r.c_[j] = a.c_[j] + b.c_[j];
        return r;
    }

    friend TruncSeries operator-(const TruncSeries &a, const TruncSeries &b) {
        check_lengths(a, b);
        TruncSeries r(a.length());
        for (std::size_t j = 0; j < a.length(); ++j)
            r.c_[j] = a.c_[j] - b.c_[j];
        return r;
    }

    friend TruncSeries operator*(const TruncSeries &a, const TruncSeries &b) {
        check_lengths(a, b);
        TruncSeries r(a.length());
        for (std::size_t i = 0; i < a.length(); ++i)
            for (std::size_t j = 0; i + j < b.length(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        return r;
    }

    friend TruncSeries operator*(const C &s, const TruncSeries &a) {
        TruncSeries r(a.length());
        for (std::size_t j = 0; j < a.length(); ++j)
            r.c_[j] = s * a.c_[j];
        return r;
    }

    TruncSeries &operator+=(const TruncSeries &o) { return *this = *this + o; }
    TruncSeries &operator-=(const TruncSeries &o) { return *this = *this - o; }
    TruncSeries &operator*=(const TruncSeries &o) { return *this = *this * o; }

    /// Multiply by T^k (shift), dropping the top coefficients.
    TruncSeries shift_up(std::size_t k) const {
        TruncSeries r(length());
        for (std::size_t j = 0; j + k < length(); ++j)
            r.c_[j + k] = c_[j];
        return r;
    }

    /// Division by a series with unit constant term.
    TruncSeries div_by_unit(const TruncSeries &b) const {
        check_lengths(*this, b);
        if (coeff_zero_mod(b.c_[0], 1))
            throw std::domain_error("div_by_unit: divisor has even constant term");
        TruncSeries q(length());
        for (std::size_t n = 0; n < length(); ++n) {
            C acc = c_[n];
            for (std::size_t j = 0; j < n; ++j)
                acc = acc - q.c_[j] * b.c_[n - j];
            q.c_[n] = coeff_div_unit(acc, b.c_[0]);
        }
        return q;
    }

  private:
    static void check_lengths(const TruncSeries &a, const TruncSeries &b) {
        if (a.length() != b.length() || a.length() == 0)
            throw std::invalid_argument("TruncSeries: mismatched truncation lengths");
    }

    std::vector<C> c_;
};

using PSeries = TruncSeries<PAdic>;
using GSeries = TruncSeries<PAdicGaussian>;

inline GSeries to_gaussian(const PSeries &s) {
    GSeries g(s.length());
    for (std::size_t j = 0; j < s.length(); ++j)
        g[j] = PAdicGaussian(s[j], PAdic::exact_zero());
    return g;
}

inline GSeries conj(const GSeries &s) {
    GSeries g(s.length());
    for (std::size_t j = 0; j < s.length(); ++j)
        g[j] = s[j].conj();
    return g;
}

inline PSeries real_part(const GSeries &s) {
    PSeries r(s.length());
    for (std::size_t j = 0; j < s.length(); ++j)
        r[j] = s[j].re();
    return r;
}

/**
 * Evaluate at an exact integer t with v2(t) >= 2.  The reported precision
 * accounts for the per-term boost j*v2(t) and the truncation tail T^N.
 */
inline PAdic eval_at(const PSeries &s, const Int &t) {
    if (t == 0)
        return s[0];
    long vt = v2(t);
    if (vt < 2)
        throw std::domain_error("eval_at: outside convergence contract (need v2 >= 2)");
    PAdic acc = s[s.length() - 1];
    for (std::size_t j = s.length() - 1; j-- > 0;)
        acc = t * acc + s[j];
    long tail = static_cast<long>(s.length()) * vt;
    return acc.truncated(tail);
}

/// Horner evaluation at a PAdic point (conservative precision propagation).
inline PAdic eval_at(const PSeries &s, const PAdic &t) {
    if (t.is_exact_zero())
        return s[0];
    if (t.valuation() < 2)
        throw std::domain_error("eval_at: outside convergence contract (need v2 >= 2)");
    PAdic acc = s[s.length() - 1];
    for (std::size_t j = s.length() - 1; j-- > 0;)
        acc = acc * t + s[j];
    long tail = static_cast<long>(s.length()) * t.valuation();
    return acc.truncated(tail);
}

inline PAdicGaussian eval_at(const GSeries &s, const Int &t) {
    if (t == 0)
        return s[0];
    long vt = v2(t);
    if (vt < 2)
        throw std::domain_error("eval_at: outside convergence contract (need v2 >= 2)");
    PAdicGaussian acc = s[s.length() - 1];
    for (std::size_t j = s.length() - 1; j-- > 0;) {
        acc = PAdicGaussian(t * acc.re(), t * acc.im());
        acc += s[j];
    }
    return acc;
}

/**
 * Interpolation grid t_n = u^n - 1, n = 1..count, for an exact integer
 * u = 5 mod 8.  Node differences satisfy v2(t_n - t_m) = 2 + v2(n - m).
 */
class NodeGrid {
  public:
    NodeGrid(const Int &u, std::size_t count) : u_(u) {
        if (mod_pow2(u, 3) != 5)
            throw std::invalid_argument("NodeGrid: u must be 5 mod 8");
        Int p(1);
        nodes_.reserve(count);
        for (std::size_t n = 1; n <= count; ++n) {
            p *= u;
            nodes_.push_back(p - 1);
        }
    }

    const Int &u() const { return u_; }
    std::size_t size() const { return nodes_.size(); }
    /// t_n for n = 1-based index.
    const Int &node(std::size_t n) const { return nodes_.at(n - 1); }

  private:
    Int u_;
    std::vector<Int> nodes_;
};

/**
 * L(x;T) = sum_n C(L(x), n) T^n where L(x) = log<x>/log(u); the zero series
 * for even x.  Coefficients are 2-adic integers: each division by n! is
 * checked to be exact.
 */
inline PSeries binom_L_series(const PAdic &x, const PAdic &u, std::size_t len) {
    PSeries s(len);
    if (x.is_exact_zero() || !x.is_unit())
        return s; // <x> = 0 extension
    PAdic ell = curlyL(x, u);
    long prec = ell.precision();
    PAdic b = PAdic::one(prec);
    s[0] = b;
    for (std::size_t n = 1; n < len; ++n) {
        b = b * (ell - PAdic(Int(n - 1), prec));
        b = div_exact_int(b, Int(n));
        s[n] = b;
    }
    return s;
}

/**
 * Certified 2-adic Newton interpolation: the unique series in Z_2[[T]] mod
 * T^n_coeffs through (t_n, values[n-1]) for n = 1..n_coeffs.  Divided
 * differences lose exactly 2 + v2(k) bits at depth-k steps; any inexact
 * division, or disagreement at the spare witness nodes, throws
 * "interpolation witness failure" (the input is then inconsistent with an
 * integral power series at this precision).
 *
 * With infinite_tail set, the data is treated as node values of a full
 * series in Z_2[[T]] rather than a polynomial: the tail aliases into the
 * fitted coefficients with error valuation >= 2*(n_coeffs - j) at index j,
 * and the certified per-coefficient precision is capped accordingly.
 * Callers wanting the first N coefficients at M bits fit N + ceil(M/2) + 1
 * coefficients and keep the first N.
 */
inline PSeries newton_fit(const NodeGrid &grid, const std::vector<PAdic> &values,
                          std::size_t n_coeffs, long m_work, bool infinite_tail = false) {
    if (n_coeffs == 0)
        throw std::invalid_argument("newton_fit: need at least one coefficient");
    if (grid.size() < n_coeffs || values.size() < n_coeffs)
        throw std::invalid_argument("newton_fit: fewer nodes than coefficients");
    if (values.size() > grid.size())
        throw std::invalid_argument("newton_fit: more values than nodes");

    std::vector<PAdic> dd;
    dd.reserve(n_coeffs);
    for (std::size_t j = 0; j < n_coeffs; ++j)
        dd.push_back(values[j].truncated(m_work));

    std::vector<PAdic> newton; // c_k = f[t_1..t_{k+1}]
    newton.reserve(n_coeffs);
    newton.push_back(dd[0]);
    for (std::size_t k = 1; k < n_coeffs; ++k) {
        // dd[j] <- (dd[j+1] - dd[j]) / (t_{j+1+k} - t_{j+1})
        for (std::size_t j = 0; j + k < n_coeffs; ++j) {
            Int den = grid.node(j + 1 + k) - grid.node(j + 1);
            try {
                dd[j] = div_exact_int(dd[j + 1] - dd[j], den);
            } catch (const std::domain_error &) {
                throw std::domain_error("interpolation witness failure");
            }
        }
        newton.push_back(dd[0]);
    }

    // Expand sum_k c_k * prod_{j<=k} (T - t_j) into the power basis.
    PSeries out(n_coeffs);
    std::vector<Int> basis{Int(1)}; // exact integer coefficients
    for (std::size_t k = 0; k < n_coeffs; ++k) {
        for (std::size_t j = 0; j < basis.size(); ++j)
            out[j] += basis[j] * newton[k];
        if (k + 1 < n_coeffs) {
            basis.push_back(Int(0));
            const Int &t = grid.node(k + 1);
            for (std::size_t j = basis.size(); j-- > 1;)
                basis[j] = basis[j - 1] - t * basis[j];
            basis[0] = -t * basis[0];
        }
    }

    // Witness nodes beyond the fitted range must reproduce the given values.
    // The remainder there is f[t_1..t_N, t_w] * prod_j (t_w - t_j), an
    // integral divided difference times a product of known valuation.
    long cert = out.certified_precision();
    for (std::size_t n = n_coeffs + 1; n <= values.size(); ++n) {
        long prod_val = 2 * static_cast<long>(n_coeffs);
        for (std::size_t j = 1; j <= n_coeffs; ++j)
            prod_val += v2(Int(n - j));
        PAdic got = eval_at(out, grid.node(n));
        long check = std::min({cert, prod_val, values[n - 1].precision(), got.precision()});
        if (!congruent(got, values[n - 1], check))
            throw std::domain_error("interpolation witness failure");
    }

    if (infinite_tail) {
        for (std::size_t j = 0; j < n_coeffs; ++j) {
            long cap = 2 * static_cast<long>(n_coeffs - j);
            if (out[j].is_exact_zero())
                out[j] = PAdic(Int(0), cap);
            else
                out[j] = out[j].truncated(cap);
        }
    }
    return out;
}

} // namespace d4zeta
