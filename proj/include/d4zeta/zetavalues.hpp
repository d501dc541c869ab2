#pragma once

#include "rationals.hpp"
#include "shintani.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace d4zeta {

/**
 * Exact values of the twisted partial zeta data for one coarse ideal class:
 * values[n] (n = 1..n_max) is the regularized, parity/sign-weighted sum over
 * the integral ideals of that class, the classical input whose 2-adic
 * reduction feeds the interpolation step.
 */
struct TwistedZetaTable {
    long d = 0;
    long f = 0;
    Ideal rep;
    std::vector<Rat> values; // index n, 1-based; values[0] unused
};

/**
 * Write-once cache for coarse zeta computations, keyed by
 * (d, f, rep, anchor set, twisted).  Concurrent duplicate computation is
 * allowed; results are identical, first write wins.
 */
class ZetaCache {
  public:
    static ZetaCache &instance() {
        static ZetaCache cache;
        return cache;
    }

    std::vector<Rat> coarse_values(const RealQuadField &F, long f, const Ideal &a0,
                                   const std::vector<QuadInt> &anchors, bool twisted,
                                   std::size_t n_max) {
        std::string key = make_key(F.d(), f, a0, anchors, twisted, n_max);
        {
            std::lock_guard<std::mutex> lock(mtx_);
            auto it = map_.find(key);
            if (it != map_.end())
                return it->second;
        }
        std::vector<Rat> vals = coarse_zeta_values(F, f, a0, anchors, twisted, n_max);
        std::lock_guard<std::mutex> lock(mtx_);
        auto [it, inserted] = map_.emplace(std::move(key), std::move(vals));
        return it->second;
    }

  private:
    static std::string make_key(long d, long f, const Ideal &a0,
                                const std::vector<QuadInt> &anchors, bool twisted,
                                std::size_t n_max) {
        std::ostringstream os;
        os << d << "|" << f << "|" << a0.a << "," << a0.b << "," << a0.c << "|" << twisted
           << "|" << n_max << "|";
        for (const auto &w : anchors)
            os << w.a << "," << w.b << ";";
        return os.str();
    }

    std::mutex mtx_;
    std::map<std::string, std::vector<Rat>> map_;
};

/// zeta_F(1-k) by Shintani aggregation over the narrow classes (exact).
inline Rat dedekind_zeta_shintani(const RealQuadField &F, std::size_t k) {
    Rat acc(0);
    for (const Ideal &rep : F.narrow_class_reps()) {
        auto vals = ZetaCache::instance().coarse_values(F, 1, rep, {QuadInt{0, 0}},
                                                        /*twisted=*/false, k);
        acc += vals[k];
    }
    return acc;
}

/// zeta_F(1-k) = zeta(1-k) * L(1-k, chi_disc) from Bernoulli numbers (exact).
inline Rat dedekind_zeta_bernoulli(const RealQuadField &F, std::size_t k) {
    Rat zeta_val = -bernoulli(k) / Rat(k);
    DirichletChar chi = DirichletChar::kronecker_char(F.disc());
    Rat l_val = -gen_bernoulli(k, chi) / Rat(k);
    return zeta_val * l_val;
}

} // namespace d4zeta
