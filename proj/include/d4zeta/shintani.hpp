#pragma once

#include "quadfield.hpp"
#include "rationals.hpp"

#include <array>
#include <functional>
#include <vector>

namespace d4zeta {

/// Coefficient list of B_n(x) in degree order x^n, x^{n-1}, ..., 1 (cached).
inline const std::vector<Rat> &bernoulli_poly_coeffs(std::size_t n) {
    static std::vector<std::vector<Rat>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while (cache.size() <= n) {
        std::size_t m = cache.size();
        std::vector<Rat> coef(m + 1);
        Int binom(1);
        for (std::size_t k = 0; k <= m; ++k) {
            coef[k] = Rat(binom) * bernoulli(k);
            binom = binom * Int(m - k) / Int(k + 1);
        }
        cache.push_back(std::move(coef));
    }
    return cache[n];
}

inline Rat bernoulli_poly_eval(std::size_t n, const Rat &x) {
    const auto &coef = bernoulli_poly_coeffs(n);
    Rat acc = coef[0];
    for (std::size_t k = 1; k <= n; ++k)
        acc = acc * x + coef[k];
    return acc;
}

/// Half-open simplicial cone {c1*g1 + c2*g2 : c1 > 0, c2 >= 0}.
struct Cone {
    QuadInt g1, g2;
};

/**
 * Shintani fundamental domain for the action of the totally positive unit
 * group on the totally positive quadrant: the hull cones of the wedge
 * between the rays through 1 and eps_plus, each unimodular over O_F.
 */
struct ConeDecomposition {
    QuadInt eps_plus;
    std::vector<Cone> cones;
};

namespace detail {

inline Int det2(const QuadInt &u, const QuadInt &v) { return u.a * v.b - u.b * v.a; }

inline Rat det2(const QuadRat &u, const QuadRat &v) { return u.x * v.y - u.y * v.x; }

inline Int ceil_div(const Int &num, const Int &den) {
    Int q = num / den;
    if (num % den != 0 && ((num > 0) == (den > 0)))
        ++q;
    return q;
}

} // namespace detail

inline ConeDecomposition shintani_decompose(const RealQuadField &F) {
    QuadInt eps = F.fundamental_unit();
    QuadInt eps_plus = (F.unit_norm() == -1) ? F.mul(eps, eps) : eps;
    if (!F.totally_positive(eps_plus))
        throw std::domain_error("shintani_decompose: eps_plus not totally positive");

    // Hull walk from w0 = 1 to eps_plus: w_{i+1} = t * w_i - w_{i-1} with the
    // least t keeping det2(w_{i+1}, eps_plus) >= 0.  Consecutive vertices span
    // unimodular cones.
    ConeDecomposition dec;
    dec.eps_plus = eps_plus;
    QuadInt prev{0, -1}; // virtual predecessor of 1 with det2(prev, w0) = 1
    QuadInt cur{1, 0};
    for (long guard = 0; guard < 100000; ++guard) {
        Int dprev = detail::det2(prev, eps_plus);
        Int dcur = detail::det2(cur, eps_plus);
        if (dcur == 0)
            break;
        if (dcur < 0)
            throw std::domain_error("shintani_decompose: walk left the wedge");
        Int t = detail::ceil_div(dprev, dcur);
        QuadInt next{t * cur.a - prev.a, t * cur.b - prev.b};
        dec.cones.push_back(Cone{cur, next});
        prev = cur;
        cur = next;
    }
    if (!(cur == eps_plus))
        throw std::domain_error("shintani_decompose: walk missed eps_plus");
    return dec;
}

/**
 * Locate a totally positive x in the tiling: returns (j, cone index) with
 * eps_plus^{-j} x in the half-open cone.  Used by the tiling tests.
 */
inline std::pair<long, std::size_t> shintani_locate(const RealQuadField &F,
                                                    const ConeDecomposition &dec,
                                                    const QuadRat &x) {
    if (!F.totally_positive(x))
        throw std::invalid_argument("shintani_locate: not totally positive");
    QuadRat eps = F.to_rat(dec.eps_plus);
    QuadRat y = x;
    long j = 0;
    // slide into the wedge between 1 and eps_plus: det2(1-dir, y) tests
    auto in_wedge = [&](const QuadRat &v) {
        QuadRat one{Rat(1), Rat(0)};
        Rat d1 = detail::det2(one, v);
        Rat d2 = detail::det2(v, F.to_rat(dec.eps_plus));
        return d1 >= 0 && d2 > 0;
    };
    for (long guard = 0; guard < 100000 && !in_wedge(y); ++guard) {
        QuadRat one{Rat(1), Rat(0)};
        if (detail::det2(one, y) < 0) {
            y = F.mul(y, eps);
            --j;
        } else {
            y = F.div(y, eps);
            ++j;
        }
    }
    if (!in_wedge(y))
        throw std::domain_error("shintani_locate: sliding failed");
    for (std::size_t i = 0; i < dec.cones.size(); ++i) {
        const Cone &C = dec.cones[i];
        Rat den = Rat(detail::det2(C.g1, C.g2));
        Rat r1 = detail::det2(y, F.to_rat(C.g2)) / den;
        Rat r2 = detail::det2(F.to_rat(C.g1), y) / den;
        if (r1 > 0 && r2 >= 0)
            return {j, i};
    }
    throw std::domain_error("shintani_locate: no cone matched");
}

/**
 * Per-cone tables for the regularized sums
 *   Z_k(r1, r2) = sum_{m,n >= 0} N((m+r1) G1 + (n+r2) G2)^{k-1}   (at s = 1-k)
 * computed as (k-1)!^2 * rational part of
 *   [tau^{k-1}] sum_{p+q=2k} B_p(r1) B_q(r2) / (p! q!) * A^{p-1} B^{q-1},
 * A(tau) = G1 + tau*conj(G1), B(tau) = G2 + tau*conj(G2).
 */
class ConeTable {
  public:
    ConeTable(const RealQuadField &F, const QuadInt &G1, const QuadInt &G2, std::size_t k_max)
        : F_(&F), kmax_(k_max) {
        std::size_t len = k_max; // coefficients tau^0 .. tau^{k_max - 1}
        auto mul_linear = [&](const std::vector<QuadRat> &s, const QuadRat &c0,
                              const QuadRat &c1) {
            std::vector<QuadRat> r(len, QuadRat{Rat(0), Rat(0)});
            for (std::size_t j = 0; j < len; ++j) {
                r[j] = F.add(r[j], F.mul(s[j], c0));
                if (j + 1 < len)
                    r[j + 1] = F.add(r[j + 1], F.mul(s[j], c1));
            }
            return r;
        };
        auto inv_linear = [&](const QuadRat &c0, const QuadRat &c1) {
            // (c0 + c1 tau)^{-1} = c0^{-1} sum (-c1/c0)^j tau^j
            std::vector<QuadRat> r(len, QuadRat{Rat(0), Rat(0)});
            QuadRat inv0 = F.inv(c0);
            QuadRat ratio = F.neg(F.mul(c1, inv0));
            QuadRat cur = inv0;
            for (std::size_t j = 0; j < len; ++j) {
                r[j] = cur;
                cur = F.mul(cur, ratio);
            }
            return r;
        };

        QuadRat a0 = F.to_rat(G1), a1 = F.to_rat(F.conj(G1));
        QuadRat b0 = F.to_rat(G2), b1 = F.to_rat(F.conj(G2));

        // powers A^j, B^j for j = -1 .. 2k_max - 1 (index shifted by 1)
        std::size_t top = 2 * k_max;
        std::vector<std::vector<QuadRat>> PA(top + 1), PB(top + 1);
        PA[0] = inv_linear(a0, a1);
        PB[0] = inv_linear(b0, b1);
        PA[1].assign(len, QuadRat{Rat(0), Rat(0)});
        PA[1][0] = QuadRat{Rat(1), Rat(0)};
        PB[1] = PA[1];
        for (std::size_t j = 2; j <= top; ++j) {
            PA[j] = mul_linear(PA[j - 1], a0, a1);
            PB[j] = mul_linear(PB[j - 1], b0, b1);
        }

        // C[k][p] = [tau^{k-1}] A^{p-1} B^{2k-p-1} / (p! (2k-p)!)
        std::vector<Rat> inv_fact(2 * k_max + 1);
        Rat f(1);
        inv_fact[0] = 1;
        for (std::size_t i = 1; i <= 2 * k_max; ++i) {
            f *= Rat(i);
            inv_fact[i] = Rat(1) / f;
        }
        C_.assign(k_max + 1, {});
        for (std::size_t k = 1; k <= k_max; ++k) {
            C_[k].assign(2 * k + 1, QuadRat{Rat(0), Rat(0)});
            for (std::size_t p = 0; p <= 2 * k; ++p) {
                std::size_t q = 2 * k - p;
                const auto &pa = PA[p]; // A^{p-1}
                const auto &pb = PB[q];
                QuadRat acc{Rat(0), Rat(0)};
                for (std::size_t j = 0; j < k; ++j)
                    acc = F.add(acc, F.mul(pa[j], pb[k - 1 - j]));
                Rat scale = inv_fact[p] * inv_fact[q];
                C_[k][p] = QuadRat{acc.x * scale, acc.y * scale};
            }
        }
        // (k-1)!^2 prefactors
        pref_.assign(k_max + 1, Rat(1));
        Rat fk(1);
        for (std::size_t k = 1; k <= k_max; ++k) {
            if (k >= 2)
                fk *= Rat((k - 1) * (k - 1));
            pref_[k] = fk;
        }
    }

    std::size_t k_max() const { return kmax_; }

    /// Z_k at the box point with coordinates (r1, r2) in (0,1] x [0,1).
    Rat value(std::size_t k, const Rat &r1, const Rat &r2) const {
        const auto &row = C_[k];
        std::vector<Rat> b1v(2 * k + 1), b2v(2 * k + 1);
        for (std::size_t p = 0; p <= 2 * k; ++p) {
            b1v[p] = bernoulli_poly_eval(p, r1);
            b2v[p] = bernoulli_poly_eval(p, r2);
        }
        QuadRat acc{Rat(0), Rat(0)};
        for (std::size_t p = 0; p <= 2 * k; ++p) {
            Rat w = b1v[p] * b2v[2 * k - p];
            if (w == 0)
                continue;
            acc.x += row[p].x * w;
            acc.y += row[p].y * w;
        }
        // rational part of acc (half-trace), times (k-1)!^2
        Rat rp = acc.x + acc.y * Rat(F_->trace_gamma()) / 2;
        return pref_[k] * rp;
    }

  private:
    const RealQuadField *F_;
    std::size_t kmax_;
    std::vector<std::vector<QuadRat>> C_; // C_[k][p]
    std::vector<Rat> pref_;
};

/// Rank-2 lattice in F with basis v1, v2 (rational coordinates in (1,gamma)).
struct PlaneLattice {
    QuadRat v1, v2;
};

/// f * a^{-1} as an explicit lattice: conj(a) scaled by f / N(a).
inline PlaneLattice ideal_inverse_lattice(const RealQuadField &F, const Ideal &a, long f) {
    Ideal ac = F.conj(a);
    Rat scale = Rat(f) / Rat(a.norm());
    return PlaneLattice{QuadRat{Rat(ac.a) * scale, Rat(0)},
                        QuadRat{Rat(ac.b) * scale, Rat(ac.c) * scale}};
}

namespace detail {

/// Least positive integer c with c*g in the lattice L.
inline Int scale_into(const RealQuadField &F, const QuadInt &g, const PlaneLattice &L) {
    (void)F;
    Rat den = det2(L.v1, L.v2);
    if (den == 0)
        throw std::domain_error("scale_into: degenerate lattice");
    QuadRat gr{Rat(g.a), Rat(g.b)};
    Rat x = det2(gr, L.v2) / den;
    Rat y = det2(L.v1, gr) / den;
    return boost::multiprecision::lcm(rat_den(x), rat_den(y));
}

inline Int floor_rat(const Rat &r) {
    Int q = rat_num(r) / rat_den(r);
    if (rat_num(r) % rat_den(r) != 0 && r < 0)
        --q;
    return q;
}

} // namespace detail

/**
 * Regularized, optionally parity/sign-weighted zeta sums over one ray-type
 * coset family:
 *
 *   S(n) = sum over mu in (union of anchors + f*a^{-1}) inside the Shintani
 *          domain of  w(N(a) N(mu), n) * (N(a) N(mu))^{n-1}
 *
 * with w(m, n) = 1 (plain mode) or [m odd] * omega(m)^n (twisted mode).
 * Values are exact rationals, n = 1..n_max.
 */
inline std::vector<Rat> coarse_zeta_values(const RealQuadField &F, long f, const Ideal &a0,
                                           const std::vector<QuadInt> &anchors, bool twisted,
                                           std::size_t n_max) {
    ConeDecomposition dec = shintani_decompose(F);
    PlaneLattice Lpt = ideal_inverse_lattice(F, a0, f);
    // the mod-4 weight is constant on translates by 4*f*a^{-1}; the plain
    // mode needs no refinement
    Rat wscale = twisted ? Rat(4) : Rat(1);
    PlaneLattice Lw{QuadRat{Lpt.v1.x * wscale, Lpt.v1.y * wscale},
                    QuadRat{Lpt.v2.x * wscale, Lpt.v2.y * wscale}};
    Int Na = a0.norm();

    std::vector<Rat> plus(n_max + 1, Rat(0)), minus(n_max + 1, Rat(0));

    for (const Cone &cone : dec.cones) {
        Int k1 = detail::scale_into(F, cone.g1, Lw);
        Int k2 = detail::scale_into(F, cone.g2, Lw);
        QuadInt G1{k1 * cone.g1.a, k1 * cone.g1.b};
        QuadInt G2{k2 * cone.g2.a, k2 * cone.g2.b};
        ConeTable table(F, G1, G2, n_max);

        QuadRat G1r = F.to_rat(G1), G2r = F.to_rat(G2);
        Rat dG = detail::det2(G1r, G2r);
        Rat dL = detail::det2(Lpt.v1, Lpt.v2);

        for (const QuadInt &w : anchors) {
            QuadRat w0{Rat(w.a), Rat(w.b)};
            // integer points (x, y): w0 + x v1 + y v2 with G-coordinates in
            // (0,1] x [0,1).  Scan the bounding box of the preimage corners.
            Rat xmin, xmax, ymin, ymax;
            bool first = true;
            for (int c1 = 0; c1 <= 1; ++c1)
                for (int c2 = 0; c2 <= 1; ++c2) {
                    QuadRat corner{G1r.x * c1 + G2r.x * c2 - w0.x,
                                   G1r.y * c1 + G2r.y * c2 - w0.y};
                    Rat cx = detail::det2(corner, Lpt.v2) / dL;
                    Rat cy = detail::det2(Lpt.v1, corner) / dL;
                    if (first) {
                        xmin = xmax = cx;
                        ymin = ymax = cy;
                        first = false;
                    } else {
                        xmin = std::min(xmin, cx);
                        xmax = std::max(xmax, cx);
                        ymin = std::min(ymin, cy);
                        ymax = std::max(ymax, cy);
                    }
                }
            for (Int x = detail::floor_rat(xmin); x <= detail::floor_rat(xmax) + 1; ++x) {
                for (Int y = detail::floor_rat(ymin); y <= detail::floor_rat(ymax) + 1; ++y) {
                    QuadRat nu{w0.x + Rat(x) * Lpt.v1.x + Rat(y) * Lpt.v2.x,
                               w0.y + Rat(x) * Lpt.v1.y + Rat(y) * Lpt.v2.y};
                    Rat r1 = detail::det2(nu, G2r) / dG;
                    Rat r2 = detail::det2(G1r, nu) / dG;
                    if (!(r1 > 0 && r1 <= 1 && r2 >= 0 && r2 < 1))
                        continue;
                    Rat mr = Rat(Na) * F.norm(nu);
                    if (rat_den(mr) != 1)
                        throw std::domain_error("coarse_zeta: non-integral ideal norm");
                    Int m = rat_num(mr);
                    int bucket = 0; // +1, -1, or 0 = skip
                    if (!twisted) {
                        bucket = +1;
                    } else if (is_odd(m)) {
                        bucket = (mod_pow2(m, 2) == 1) ? +1 : -1;
                    }
                    if (bucket == 0)
                        continue;
                    for (std::size_t k = 1; k <= n_max; ++k) {
                        Rat v = table.value(k, r1, r2);
                        if (bucket > 0)
                            plus[k] += v;
                        else
                            minus[k] += v;
                    }
                }
            }
        }
    }

    std::vector<Rat> out(n_max + 1, Rat(0));
    Rat napow(1); // N(a)^{n-1}
    for (std::size_t n = 1; n <= n_max; ++n) {
        Rat combo = twisted ? (n % 2 == 0 ? Rat(plus[n] + minus[n]) : Rat(plus[n] - minus[n]))
                            : plus[n];
        out[n] = napow * combo;
        napow *= Rat(Na);
    }
    return out;
}

} // namespace d4zeta
