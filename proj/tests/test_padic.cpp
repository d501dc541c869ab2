#include <catch2/catch_amalgamated.hpp>

#include <d4zeta/padic.hpp>

#include <random>

using namespace d4zeta;

namespace {

// exp series on 1 + 8Z_2, test-only inverse to the logarithm
PAdic exp_series(const PAdic &t, long out_prec) {
    // converges for v2(t) >= 3: term t^n/n! has valuation >= 3n - (n-1) = 2n+1
    if (!t.is_exact_zero() && t.valuation() < 3)
        throw std::domain_error("exp_series: needs v2 >= 3");
    long work = t.precision();
    PAdic acc = PAdic::one(work);
    PAdic power = PAdic::one(work);
    Int fact(1);
    for (long n = 1; 2 * n + 1 <= out_prec + 4; ++n) {
        power *= t;
        fact *= n;
        long k = (fact == 1) ? 0 : v2(fact);
        Int odd = fact >> static_cast<unsigned>(k);
        PAdic term = power.div_unit(PAdic(odd, work));
        if (k > 0)
            term = term.div_pow2(k);
        acc += term;
    }
    return acc.truncated(out_prec);
}

std::mt19937_64 rng(20260810);

Int random_odd(long bits) {
    Int r(0);
    for (long i = 0; i < bits; i += 32)
        r = (r << 32) | Int(static_cast<uint32_t>(rng()));
    return r | 1;
}

} // namespace

TEST_CASE("decompose on units") {
    const long M = 64;
    auto d5 = decompose(PAdic(5, M));
    CHECK(d5.sign == +1);
    CHECK(d5.angle.residue() == 5);

    auto d3 = decompose(PAdic(3, M));
    CHECK(d3.sign == -1);
    CHECK(d3.angle.residue() == mod_pow2(Int(-3), M));

    auto d145 = decompose(PAdic(145, M));
    CHECK(d145.sign == +1);
    CHECK(d145.angle.residue() == 145);

    CHECK_THROWS_WITH(decompose(PAdic(6, M)), "not a 2-adic unit");

    // angle * sign = x at full precision; angle = 1 mod 4
    for (int i = 0; i < 200; ++i) {
        PAdic x(random_odd(64), M);
        auto ds = decompose(x);
        PAdic back = (ds.sign == 1) ? ds.angle : -ds.angle;
        CHECK(congruent(back, x, M));
        CHECK(ds.angle.residue_mod(2) == 1);
    }
}

TEST_CASE("angle part is multiplicative, and so is the sign") {
    const long M = 48;
    for (int i = 0; i < 200; ++i) {
        PAdic x(random_odd(48), M), y(random_odd(48), M);
        auto dx = decompose(x), dy = decompose(y), dxy = decompose(x * y);
        CHECK(congruent(dxy.angle, dx.angle * dy.angle, M));
        CHECK(dxy.sign == dx.sign * dy.sign);
    }
    // <.> = 0 on even input
    CHECK(angle_part(PAdic(6, M)).is_exact_zero());
}

TEST_CASE("v2(u^k - 1) = 2 + v2(k) for u = 5 mod 8") {
    for (Int u : {Int(5), Int(13), Int(21), Int(-3)}) {
        Int p(1);
        for (long k = 1; k <= 64; ++k) {
            p *= u;
            CHECK(v2(Int(p - 1)) == 2 + v2(Int(k)));
        }
    }
}

TEST_CASE("iwasawa_log basics") {
    const long M = 96;
    CHECK(iwasawa_log(PAdic(1, M)).is_zero_mod(64));
    CHECK(iwasawa_log(PAdic(-1, M)).is_zero_mod(64));

    // homomorphism: log(u^2) = 2 log(u), mod 2^20 and beyond
    PAdic u(5, M);
    PAdic l1 = iwasawa_log(u);
    PAdic l2 = iwasawa_log(u * u);
    CHECK(congruent(l2, Int(2) * l1, 20));
    CHECK(congruent(l2, Int(2) * l1, 80));

    // log(5) mod 2^8 against independently computed partial sums of
    // log(1+4) = 4 - 4^2/2 + 4^3/3 - ... : the tail beyond n = 4 has
    // valuation >= 2*5 - v2(5) = 10 > 8.
    // 4 - 8 + 64/3 - 64 mod 2^8: 64/3 = 64 * inv(3)
    Int inv3 = inv_mod_pow2(Int(3), 8);
    Int expect = mod_pow2(Int(4 - 8 - 64) + Int(64) * inv3, 8);
    CHECK(iwasawa_log(PAdic(5, M)).residue_mod(8) == expect);

    // homomorphism on random pairs
    for (int i = 0; i < 100; ++i) {
        PAdic x(random_odd(90), M), y(random_odd(90), M);
        CHECK(congruent(iwasawa_log(x * y), iwasawa_log(x) + iwasawa_log(y), 80));
    }
}

TEST_CASE("exp is a right inverse of log on 1 + 8Z_2") {
    const long M = 128; // headroom for the n! losses in the test-only exp
    for (int i = 0; i < 50; ++i) {
        Int t = (random_odd(60) << 3); // v2 = 3
        PAdic x = PAdic::one(M) + PAdic(t, M);
        PAdic lx = iwasawa_log(x);
        PAdic back = exp_series(lx, 70);
        CHECK(congruent(back, x, 70));
    }
}

TEST_CASE("iwasawa_log is injective at certified bits on 1+4Z_2") {
    const long M = 60;
    PAdic a = PAdic(1 + 4 * 3, M), b = PAdic(1 + 4 * 7, M);
    CHECK_FALSE(congruent(iwasawa_log(a), iwasawa_log(b), 8));
}

TEST_CASE("curlyL") {
    const long M = 96;
    PAdic u(5, M);
    CHECK(curlyL(u, u).residue_mod(60) == 1);
    CHECK(curlyL(PAdic(1, M), u).is_zero_mod(60));
    CHECK(curlyL(u * u * u, u).residue_mod(60) == 3);
    CHECK_THROWS(curlyL(PAdic(3, M), PAdic(9, M)));
    // additivity
    for (int i = 0; i < 50; ++i) {
        PAdic x(random_odd(90), M), y(random_odd(90), M);
        CHECK(congruent(curlyL(x * y, u), curlyL(x, u) + curlyL(y, u), 70));
    }
}

TEST_CASE("hensel_sqrt") {
    const long M = 64;
    CHECK(hensel_sqrt(PAdic(1, M)).residue_mod(40) == 1);

    // 9 -> the root = 1 mod 4, which is -3
    PAdic r9 = hensel_sqrt(PAdic(9, M));
    CHECK(r9.residue_mod(40) == mod_pow2(Int(-3), 40));

    PAdic r145 = hensel_sqrt(PAdic(145, M));
    CHECK(congruent(r145 * r145, PAdic(145, M), 60));
    CHECK(r145.residue_mod(2) == 1);

    CHECK_THROWS(hensel_sqrt(PAdic(3, M)));
    CHECK_THROWS(hensel_sqrt(PAdic(5, M)));
    CHECK_THROWS(hensel_sqrt(PAdic(2, M)));

    // even valuation: sqrt(4 * 17^2) etc
    PAdic r = hensel_sqrt(PAdic(4 * 145, M));
    CHECK(congruent(r * r, PAdic(4 * 145, M), 50));

    for (int i = 0; i < 100; ++i) {
        Int s = random_odd(50);
        PAdic sq = PAdic(s * s, M);
        PAdic root = hensel_sqrt(sq);
        CHECK(congruent(root * root, sq, 60));
    }
}

TEST_CASE("PAdicGaussian conjugation fixes exactly the real line") {
    const long M = 40;
    PAdicGaussian z(PAdic(7, M), PAdic(10, M));
    CHECK(congruent(z.conj().im(), -z.im(), M));
    CHECK_FALSE(congruent(z.conj().im(), z.im(), M)); // moved off the real line
    CHECK(congruent(z.conj().conj().im(), z.im(), M));

    PAdicGaussian real(PAdic(9, M), PAdic::exact_zero());
    CHECK(real.conj().im().is_exact_zero());

    // conj is a ring map: conj(zw) = conj(z) conj(w)
    for (int i = 0; i < 100; ++i) {
        PAdicGaussian a(PAdic(random_odd(30), M), PAdic(random_odd(30), M));
        PAdicGaussian b(PAdic(random_odd(30), M), PAdic(random_odd(30), M));
        PAdicGaussian lhs = (a * b).conj();
        PAdicGaussian rhs = a.conj() * b.conj();
        CHECK(congruent(lhs.re(), rhs.re(), M));
        CHECK(congruent(lhs.im(), rhs.im(), M));
    }

    // norm lands in PAdic: re^2 + im^2
    PAdicGaussian w(PAdic(3, M), PAdic(4, M));
    CHECK(w.norm().residue_mod(8) == mod_pow2(Int(25), 8));

    // i^2 = -1
    PAdicGaussian i = PAdicGaussian::i_unit(M);
    CHECK(congruent((i * i).re(), PAdic(-1, M), M));
}

TEST_CASE("precision contract") {
    PAdic a(11, 32), b(13, 48);
    CHECK((a + b).precision() == 32);
    CHECK((a * b).precision() == 32);
    PAdic c(48, 32); // v2 = 4
    CHECK(c.div_pow2(4).precision() == 28);
    CHECK(c.div_pow2(4).residue() == 3);
    CHECK_THROWS(c.div_pow2(5));
    // division by units costs nothing
    CHECK(a.div_unit(b).precision() == 32);
    CHECK(congruent(a.div_unit(b) * b, a, 32));
}
