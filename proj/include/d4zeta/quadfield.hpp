#pragma once

#include "rationals.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

namespace d4zeta {

/// Element a + b*gamma of O_F (gamma = (1+sqrt d)/2 for d = 1 mod 4, else sqrt d).
struct QuadInt {
    Int a{0}, b{0};
    bool operator==(const QuadInt &o) const { return a == o.a && b == o.b; }
};

/// Element x + y*gamma of F with rational coordinates.
struct QuadRat {
    Rat x{0}, y{0};
    bool operator==(const QuadRat &o) const { return x == o.x && y == o.y; }
};

/**
 * Integral ideal in Hermite normal form over the basis (1, gamma):
 * the Z-module with basis {a, b + c*gamma}, 0 <= b < a, c | a, c | b.
 * Norm = a*c.
 */
struct Ideal {
    Int a{1}, b{0}, c{1};
    Int norm() const { return a * c; }
    bool operator==(const Ideal &o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const Ideal &o) const {
        return std::tie(a, c, b) < std::tie(o.a, o.c, o.b);
    }
};

enum class SplitType { split, inert, ramified };

class RealQuadField {
  public:
    explicit RealQuadField(long d) : d_(d) {
        if (d <= 1 || !is_squarefree(d))
            throw std::invalid_argument("RealQuadField: d must be squarefree > 1");
        one_mod4_ = (d % 4 == 1);
        disc_ = one_mod4_ ? d : 4 * d;
        tr_gamma_ = one_mod4_ ? 1 : 0;
        n_gamma_ = one_mod4_ ? Int((1 - d) / 4) : Int(-d);
        sqrt_disc_floor_ = isqrt_long(disc_);
        compute_fundamental_unit();
        compute_class_numbers();
    }

    long d() const { return d_; }
    long disc() const { return disc_; }
    bool d_is_1_mod4() const { return one_mod4_; }
    Int trace_gamma() const { return Int(tr_gamma_); }
    Int norm_gamma() const { return n_gamma_; }

    const QuadInt &fundamental_unit() const { return eps_; }
    int unit_norm() const { return eps_norm_; }
    long class_number() const { return h_; }
    long narrow_class_number() const { return h_narrow_; }

    // ---- element arithmetic ----

    QuadInt conj(const QuadInt &x) const { return {x.a + Int(tr_gamma_) * x.b, -x.b}; }
    QuadRat conj(const QuadRat &x) const { return {x.x + Rat(tr_gamma_) * x.y, -x.y}; }

    Int norm(const QuadInt &x) const {
        return x.a * x.a + Int(tr_gamma_) * x.a * x.b + n_gamma_ * x.b * x.b;
    }
    Rat norm(const QuadRat &x) const {
        return x.x * x.x + Rat(tr_gamma_) * x.x * x.y + Rat(n_gamma_) * x.y * x.y;
    }
    Int trace(const QuadInt &x) const { return 2 * x.a + Int(tr_gamma_) * x.b; }
    Rat trace(const QuadRat &x) const { return 2 * x.x + Rat(tr_gamma_) * x.y; }

    QuadInt mul(const QuadInt &u, const QuadInt &v) const {
        // gamma^2 = tr*gamma - n
        return {u.a * v.a - n_gamma_ * u.b * v.b,
                u.a * v.b + u.b * v.a + Int(tr_gamma_) * u.b * v.b};
    }
    QuadRat mul(const QuadRat &u, const QuadRat &v) const {
        return {u.x * v.x - Rat(n_gamma_) * u.y * v.y,
                u.x * v.y + u.y * v.x + Rat(tr_gamma_) * u.y * v.y};
    }
    QuadRat add(const QuadRat &u, const QuadRat &v) const { return {u.x + v.x, u.y + v.y}; }
    QuadRat sub(const QuadRat &u, const QuadRat &v) const { return {u.x - v.x, u.y - v.y}; }
    QuadRat neg(const QuadRat &u) const { return {-u.x, -u.y}; }

    QuadRat inv(const QuadRat &u) const {
        Rat n = norm(u);
        if (n == 0)
            throw std::domain_error("QuadRat: inverting zero");
        QuadRat cb = conj(u);
        return {cb.x / n, cb.y / n};
    }
    QuadRat div(const QuadRat &u, const QuadRat &v) const { return mul(u, inv(v)); }

    QuadRat to_rat(const QuadInt &x) const { return {Rat(x.a), Rat(x.b)}; }

    std::optional<QuadInt> to_int(const QuadRat &x) const {
        if (rat_den(x.x) != 1 || rat_den(x.y) != 1)
            return std::nullopt;
        return QuadInt{rat_num(x.x), rat_num(x.y)};
    }

    QuadInt int_pow_elem(QuadInt base, unsigned long e) const {
        QuadInt r{1, 0};
        while (e) {
            if (e & 1)
                r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    /// Coordinates (x, y) with value = x + y*sqrt(d), from the (1,gamma) basis.
    std::pair<Rat, Rat> sqrt_basis(const QuadRat &v) const {
        if (one_mod4_)
            return {v.x + v.y / 2, v.y / 2};
        return {v.x, v.y};
    }

    /// Exact sign of x + y*sqrt(d).
    static int sign_xy(const Rat &x, const Rat &y, long d) {
        if (y == 0)
            return x > 0 ? 1 : (x < 0 ? -1 : 0);
        if (x == 0)
            return y > 0 ? 1 : -1;
        if (x > 0 && y > 0)
            return 1;
        if (x < 0 && y < 0)
            return -1;
        Rat lhs = x * x, rhs = y * y * d;
        if (lhs == rhs)
            throw std::domain_error("sign: element is rationally degenerate");
        bool x_wins = lhs > rhs;
        return x_wins ? (x > 0 ? 1 : -1) : (y > 0 ? 1 : -1);
    }

    /// Sign under the embedding sending sqrt(d) to the positive root.
    int sign1(const QuadRat &v) const {
        auto [x, y] = sqrt_basis(v);
        return sign_xy(x, y, d_);
    }
    /// Sign under the conjugate embedding.
    int sign2(const QuadRat &v) const {
        auto [x, y] = sqrt_basis(v);
        return sign_xy(x, -y, d_);
    }
    bool totally_positive(const QuadRat &v) const { return sign1(v) > 0 && sign2(v) > 0; }
    bool totally_positive(const QuadInt &v) const { return totally_positive(to_rat(v)); }

    /// Compare x + y*sqrt(d) against 1 under the positive embedding.
    bool greater_than_one(const QuadRat &v) const {
        QuadRat w{v.x - 1, v.y};
        return sign1(w) > 0;
    }

    // ---- ideals ----

    Ideal ring_of_integers() const { return Ideal{1, 0, 1}; }

    /// HNF of the Z-module spanned by the given elements; must be O-stable
    /// (callers pass ideal generator lists closed under multiplication by gamma).
    Ideal hnf_from_pairs(std::vector<QuadInt> gens) const {
        // Column reduction: first make a single generator with nonzero
        // gamma-part via gcd, then reduce the rest to rational integers.
        Int c(0), b(0);
        for (auto &g : gens) {
            if (g.b == 0)
                continue;
            if (c == 0) {
                c = g.b;
                b = g.a;
            } else {
                // gcd combine (c, g.b)
                Int x, y, gduv = ext_gcd(c, g.b, x, y);
                Int nb = x * b + y * g.a;
                // replace: new pivot (gduv), and g reduced to pure integer
                Int t = g.b / gduv, s = c / gduv;
                Int reduced_a = t * b - s * g.a; // gamma-part cancels
                c = gduv;
                b = nb;
                g = QuadInt{reduced_a, Int(0)};
            }
        }
        Int a(0);
        for (const auto &g : gens) {
            if (g.b == 0 && g.a != 0)
                a = (a == 0) ? boost::multiprecision::abs(g.a) : int_gcd(a, g.a);
        }
        if (c == 0 || a == 0)
            throw std::domain_error("hnf_from_pairs: module has rank < 2");
        if (c < 0) {
            c = -c;
            b = -b;
        }
        b %= a;
        if (b < 0)
            b += a;
        Ideal I{a, b, c};
        if (I.a % I.c != 0 || I.b % I.c != 0)
            throw std::domain_error("hnf_from_pairs: module is not an O-ideal");
        return I;
    }

    Ideal ideal_from_element(const QuadInt &g) const {
        if (g.a == 0 && g.b == 0)
            throw std::invalid_argument("ideal_from_element: zero element");
        QuadInt gg = mul(g, QuadInt{0, 1});
        return hnf_from_pairs({g, gg});
    }

    Ideal ideal_from_int(const Int &n) const {
        if (n == 0)
            throw std::invalid_argument("ideal_from_int: zero");
        Int m = boost::multiprecision::abs(n);
        return Ideal{m, 0, m};
    }

    Ideal mul(const Ideal &I, const Ideal &J) const {
        QuadInt u1{I.a, 0}, u2{I.b, I.c};
        QuadInt v1{J.a, 0}, v2{J.b, J.c};
        std::vector<QuadInt> gens;
        for (const auto &u : {u1, u2})
            for (const auto &v : {v1, v2}) {
                QuadInt p = mul(u, v);
                gens.push_back(p);
                gens.push_back(mul(p, QuadInt{0, 1}));
            }
        return hnf_from_pairs(std::move(gens));
    }

    Ideal conj(const Ideal &I) const {
        QuadInt u{I.a, 0}, v = conj(QuadInt{I.b, I.c});
        std::vector<QuadInt> gens{u, mul(u, QuadInt{0, 1}), v, mul(v, QuadInt{0, 1})};
        return hnf_from_pairs(std::move(gens));
    }

    Ideal pow(Ideal base, unsigned long e) const {
        Ideal r = ring_of_integers();
        while (e) {
            if (e & 1)
                r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    bool contains(const Ideal &I, const QuadInt &x) const {
        // x = s*(a,0) + t*(b,c)
        if (x.b % I.c != 0)
            return false;
        Int t = x.b / I.c;
        Int rem = x.a - t * I.b;
        return rem % I.a == 0;
    }

    bool coprime(const Ideal &I, const Ideal &J) const {
        // I + J = O iff the combined module is everything
        std::vector<QuadInt> gens{{I.a, 0}, {I.b, I.c}, {J.a, 0}, {J.b, J.c}};
        Ideal S = hnf_from_pairs(std::move(gens));
        return S.a == 1 && S.c == 1;
    }

    SplitType split_type(long p) const {
        long k = kronecker(Int(disc_), Int(p));
        if (k == 1)
            return SplitType::split;
        if (k == -1)
            return SplitType::inert;
        return SplitType::ramified;
    }

    /// Prime ideals above p, sorted by HNF b-entry (deterministic).
    std::vector<Ideal> primes_above(long p) const {
        std::vector<Ideal> out;
        std::vector<long> roots;
        for (long r = 0; r < p; ++r) {
            // r^2 - tr*r + n = 0 mod p
            Int val = Int(r) * r - Int(tr_gamma_) * r + n_gamma_;
            if (val % p == 0)
                roots.push_back(r);
        }
        switch (split_type(p)) {
        case SplitType::split: {
            if (roots.size() != 2)
                throw std::domain_error("primes_above: expected two roots");
            for (long r : roots) {
                Int b = Int(p) - r;
                b %= p;
                if (b < 0)
                    b += p;
                out.push_back(Ideal{Int(p), b, Int(1)});
            }
            std::sort(out.begin(), out.end(),
                      [](const Ideal &x, const Ideal &y) { return x.b < y.b; });
            return out;
        }
        case SplitType::ramified: {
            if (roots.size() != 1)
                throw std::domain_error("primes_above: expected a double root");
            Int b = Int(p) - roots[0];
            b %= p;
            if (b < 0)
                b += p;
            out.push_back(Ideal{Int(p), b, Int(1)});
            return out;
        }
        case SplitType::inert:
            out.push_back(Ideal{Int(p), 0, Int(p)});
            return out;
        }
        return out;
    }

    /// Prime ideals sorted by (norm, HNF b), up to norm bound.
    std::vector<Ideal> primes_by_norm(long bound) const {
        std::vector<Ideal> out;
        for (long p = 2; p <= bound; ++p) {
            if (!is_prime(p))
                continue;
            for (const auto &P : primes_above(p))
                if (P.norm() <= bound)
                    out.push_back(P);
        }
        std::sort(out.begin(), out.end(), [](const Ideal &x, const Ideal &y) {
            return std::make_tuple(x.norm(), x.b) < std::make_tuple(y.norm(), y.b);
        });
        return out;
    }

    /// All integral ideals of norm n, in deterministic (c, b) order.
    std::vector<Ideal> ideals_of_norm(const Int &n) const {
        std::vector<Ideal> out;
        for (Int c = 1; c * c <= n; ++c) {
            if (n % (c * c) != 0)
                continue;
            Int ap = n / (c * c);
            for (Int bp = 0; bp < ap; ++bp) {
                Int nv = bp * bp + Int(tr_gamma_) * bp + n_gamma_;
                if (nv % ap == 0)
                    out.push_back(Ideal{ap * c, bp * c, c});
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // ---- reduction walk: class identification and principal generators ----

    /// Canonical label of the reduced cycle of the wide ideal class of I.
    std::pair<Int, Int> class_label(const Ideal &I) const {
        auto cyc = cycle_states(I);
        return *std::min_element(cyc.begin(), cyc.end());
    }

    bool is_principal(const Ideal &I) const { return class_label(I) == principal_label(); }

    /**
     * A generator of a principal ideal, via the continued-fraction walk with
     * tracked elements.  Throws if the ideal is not principal.
     */
    QuadRat principal_generator(const Ideal &I) const {
        ensure_principal_cycle();
        // strip integer content
        Int content = I.c;
        Ideal P{I.a / content, I.b / content, 1};
        WalkState st = walk_init(P);
        QuadRat track{Rat(P.a), Rat(0)}; // lattice scale a
        for (long iter = 0; iter < kMaxWalk; ++iter) {
            auto key = std::make_pair(st.P, st.Q);
            auto it = principal_track_.find(key);
            if (it != principal_track_.end()) {
                QuadRat g = div(track, it->second);
                g.x *= content;
                g.y *= content;
                if (!(ideal_from_rat(g) == I))
                    throw std::domain_error("principal_generator: verification failed");
                return g;
            }
            walk_step(st, track);
        }
        throw std::domain_error("principal_generator: ideal is not principal");
    }

    Ideal ideal_from_rat(const QuadRat &g) const {
        Int den = boost::multiprecision::lcm(rat_den(g.x), rat_den(g.y));
        if (den != 1)
            throw std::domain_error("ideal_from_rat: generator not integral");
        return ideal_from_element(QuadInt{rat_num(g.x), rat_num(g.y)});
    }

    /// Equivalence modulo totally positive principal ideals.
    bool narrow_equivalent(const Ideal &A, const Ideal &B) const {
        if (!(class_label(A) == class_label(B)))
            return false;
        if (eps_norm_ == -1)
            return true; // units realize every sign pattern
        QuadRat g = principal_generator(mul(A, conj(B)));
        return norm(g) > 0;
    }

    /// One integral ideal per narrow class, least norm first (deterministic).
    std::vector<Ideal> narrow_class_reps() const {
        std::vector<Ideal> reps;
        for (Int n = 1; static_cast<long>(reps.size()) < h_narrow_; ++n) {
            for (const Ideal &I : ideals_of_norm(n)) {
                bool fresh = true;
                for (const Ideal &R : reps)
                    if (narrow_equivalent(I, R)) {
                        fresh = false;
                        break;
                    }
                if (fresh) {
                    reps.push_back(I);
                    if (static_cast<long>(reps.size()) == h_narrow_)
                        break;
                }
            }
            if (n > 10000)
                throw std::domain_error("narrow_class_reps: search bound exhausted");
        }
        return reps;
    }

    static bool is_prime(long n) {
        if (n < 2)
            return false;
        for (long p = 2; p * p <= n; ++p)
            if (n % p == 0)
                return false;
        return true;
    }

  private:
    static constexpr long kMaxWalk = 20000;

    static Int ext_gcd(const Int &aa, const Int &bb, Int &x, Int &y) {
        if (bb == 0) {
            x = (aa >= 0) ? 1 : -1;
            y = 0;
            return boost::multiprecision::abs(aa);
        }
        Int x1, y1;
        Int g = ext_gcd(bb, aa % bb, x1, y1);
        x = y1;
        y = x1 - (aa / bb) * y1;
        return g;
    }

    // --- continued fraction of quadratic irrationals (P + sqrt(D))/Q ---

    /// floor((P + sqrt(D))/Q) with D nonsquare, Q != 0, exactly.
    Int cf_floor(const Int &P, const Int &Q) const {
        Int s(sqrt_disc_floor_);
        Int num = (Q > 0) ? Int(P + s) : Int(P + s + 1);
        Int q = num / Q;
        if ((num % Q != 0) && ((num < 0) != (Q < 0)))
            --q; // floor division
        return q;
    }

    struct WalkState {
        Int P, Q;
    };

    /// tau = (b + gamma)/a as (P + sqrt(D))/Q with Q | D - P^2.
    WalkState walk_init(const Ideal &prim) const {
        return WalkState{2 * prim.b + Int(tr_gamma_), 2 * prim.a};
    }

    /// One CF step; multiplies track by (tau - m).
    void walk_step(WalkState &st, QuadRat &track) const {
        Int m = cf_floor(st.P, st.Q);
        Int Pn = m * st.Q - st.P;
        Int Qn = (Int(disc_) - Pn * Pn) / st.Q;
        // tau - m = (-Pn + sqrt(D))/Q, as x + y*gamma: sqrt(D) = 2*gamma - tr
        QuadRat factor{Rat(-Pn - Int(tr_gamma_), 1) / Rat(st.Q), Rat(2) / Rat(st.Q)};
        track = mul(track, factor);
        st.P = Pn;
        st.Q = Qn;
    }

    std::vector<std::pair<Int, Int>> cycle_states(const Ideal &I) const {
        Ideal P{I.a / I.c, I.b / I.c, 1};
        WalkState st = walk_init(P);
        QuadRat dummy{Rat(1), Rat(0)};
        std::map<std::pair<Int, Int>, long> seen;
        std::vector<std::pair<Int, Int>> order;
        for (long iter = 0; iter < kMaxWalk; ++iter) {
            auto key = std::make_pair(st.P, st.Q);
            auto it = seen.find(key);
            if (it != seen.end())
                return {order.begin() + it->second, order.end()};
            seen[key] = iter;
            order.push_back(key);
            walk_step(st, dummy);
        }
        throw std::domain_error("cycle_states: walk did not cycle");
    }

    const std::pair<Int, Int> &principal_label() const {
        ensure_principal_cycle();
        return principal_label_;
    }

    void ensure_principal_cycle() const {
        if (!principal_track_.empty())
            return;
        WalkState st = walk_init(ring_of_integers());
        QuadRat track{Rat(1), Rat(0)};
        std::map<std::pair<Int, Int>, QuadRat> seen;
        for (long iter = 0; iter < kMaxWalk; ++iter) {
            auto key = std::make_pair(st.P, st.Q);
            if (seen.count(key)) {
                principal_track_ = std::move(seen);
                principal_label_ =
                    *std::min_element(cycle_states(ring_of_integers()).begin(),
                                      cycle_states(ring_of_integers()).end());
                return;
            }
            seen.emplace(key, track);
            walk_step(st, track);
        }
        throw std::domain_error("principal cycle: walk did not cycle");
    }

    // --- fundamental unit by the continued fraction of gamma ---

    void compute_fundamental_unit() {
        Int P(tr_gamma_), Q(2); // gamma = (tr + sqrt(D))/2
        std::map<std::pair<Int, Int>, long> seen;
        std::vector<Int> partials;
        long start = -1;
        for (long iter = 0; iter < kMaxWalk; ++iter) {
            auto key = std::make_pair(P, Q);
            auto it = seen.find(key);
            if (it != seen.end()) {
                start = it->second;
                break;
            }
            seen[key] = iter;
            Int m = cf_floor(P, Q);
            partials.push_back(m);
            Int Pn = m * Q - P;
            Int Qn = (Int(disc_) - Pn * Pn) / Q;
            P = Pn;
            Q = Qn;
        }
        if (start < 0)
            throw std::domain_error("fundamental_unit: no cycle found");
        // product of [[m,1],[1,0]] over the cycle
        Int p(1), pp(0), q(0), qq(1);
        long cyclen = static_cast<long>(partials.size()) - start;
        for (std::size_t k = start; k < partials.size(); ++k) {
            const Int &m = partials[k];
            Int np = p * m + pp, nq = q * m + qq;
            pp = p;
            qq = q;
            p = np;
            q = nq;
        }
        // state at cycle start
        Int Ps(tr_gamma_), Qs(2);
        for (long k = 0; k < start; ++k) {
            Int m = cf_floor(Ps, Qs);
            Int Pn = m * Qs - Ps;
            Qs = (Int(disc_) - Pn * Pn) / Qs;
            Ps = Pn;
        }
        // eps = q*alpha + qq with alpha = (Ps + sqrt(D))/Qs; sqrt(D) = 2*gamma - tr
        Rat xx = Rat(q) * Rat(Ps - Int(tr_gamma_), 1) / Rat(Qs) + Rat(qq);
        Rat yy = Rat(2 * q) / Rat(Qs);
        if (rat_den(xx) != 1 || rat_den(yy) != 1)
            throw std::domain_error("fundamental_unit: non-integral unit");
        eps_ = QuadInt{rat_num(xx), rat_num(yy)};
        Int n = norm(eps_);
        if (n != 1 && n != -1)
            throw std::domain_error("fundamental_unit: norm is not a unit");
        eps_norm_ = (n == 1) ? 1 : -1;
        if (!greater_than_one(to_rat(eps_)))
            throw std::domain_error("fundamental_unit: unit not > 1");
        (void)cyclen;
    }

    // --- narrow class number by reduced indefinite forms ---

    void compute_class_numbers() {
        const long D = disc_;
        auto reduced = [&](long aa, long bb) {
            // 0 < b < sqrt(D), sqrt(D) - b < 2|a| < sqrt(D) + b
            if (bb <= 0)
                return false;
            long twoa = 2 * std::abs(aa);
            // conditions via exact integer comparisons with sqrt(D)
            // b < sqrt(D): b^2 < D; (sqrt(D)-b)^2 < (2|a|)^2 when sqrt(D) > b
            if (bb * bb >= D)
                return false;
            long lhs = twoa - bb; // need sqrt(D) > 2|a| - b i.e. D > (2|a|-b)^2 if positive
            if (lhs > 0 && lhs * lhs >= D)
                return false;
            long rhs = twoa + bb;
            if (rhs * rhs <= D)
                return false;
            return true;
        };
        std::map<std::pair<long, long>, bool> forms; // (a, b) -> visited
        for (long b = 1; b * b < D; ++b) {
            if ((D - b * b) % 4 != 0)
                continue;
            long ac = (b * b - D) / 4; // negative
            for (long a = 1; a * a * 4 < (b + sqrt_disc_floor_ + 1) * (b + sqrt_disc_floor_ + 1);
                 ++a) {
                if (ac % a != 0)
                    continue;
                for (long sa : {a, -a}) {
                    if (reduced(sa, b))
                        forms[{sa, b}] = false;
                }
            }
        }
        long cycles = 0;
        for (auto &entry : forms) {
            if (entry.second)
                continue;
            ++cycles;
            long aa = entry.first.first, bb = entry.first.second;
            for (long guard = 0; guard < 100000; ++guard) {
                auto it = forms.find({aa, bb});
                if (it == forms.end())
                    throw std::domain_error("form cycle left the reduced set");
                if (it->second)
                    break;
                it->second = true;
                // rho: (a,b,c) -> (c, r, ...) with r = -b mod 2c nearest to sqrt(D)
                long cc_num = (bb * bb - D) / (4 * aa);
                long twoc = 2 * std::abs(cc_num);
                long r = ((-bb) % twoc + twoc) % twoc;
                // choose r with sqrt(D) - 2|c| < r < sqrt(D)
                while (r < sqrt_disc_floor_ + 1 - twoc)
                    r += twoc;
                while (r > sqrt_disc_floor_)
                    r -= twoc;
                aa = cc_num;
                bb = r;
            }
        }
        h_narrow_ = cycles;
        h_ = (eps_norm_ == -1) ? h_narrow_ : h_narrow_ / 2;
        if (eps_norm_ == 1 && h_narrow_ % 2 != 0)
            throw std::domain_error("class number: parity inconsistency");
    }

    long d_;
    long disc_;
    bool one_mod4_;
    long tr_gamma_;
    Int n_gamma_;
    long sqrt_disc_floor_;
    QuadInt eps_;
    int eps_norm_ = 0;
    long h_ = 0, h_narrow_ = 0;

    mutable std::map<std::pair<Int, Int>, QuadRat> principal_track_;
    mutable std::pair<Int, Int> principal_label_;
};

} // namespace d4zeta
