#include <catch2/catch_amalgamated.hpp>

#include <d4zeta/rationals.hpp>

using namespace d4zeta;

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == Rat(1));
    CHECK(bernoulli(1) == Rat(-1, 2));
    CHECK(bernoulli(2) == Rat(1, 6));
    CHECK(bernoulli(4) == Rat(-1, 30));
    CHECK(bernoulli(12) == Rat(-691, 2730));
    // von Staudt-Clausen: denominator of B_12 is 2*3*5*7*13 = 2730
    CHECK(rat_den(bernoulli(12)) == 2730);
    CHECK(bernoulli(7) == 0);
}

TEST_CASE("zeta at negative odd integers via Bernoulli") {
    // zeta(1-n) = -B_n/n, rational identity exercised for n = 2,4,6,8
    CHECK(-bernoulli(2) / 2 == Rat(-1, 12));
    CHECK(-bernoulli(4) / 4 == Rat(1, 120));
    CHECK(-bernoulli(6) / 6 == Rat(-1, 252));
    CHECK(-bernoulli(8) / 8 == Rat(1, 240));
}

TEST_CASE("kronecker symbol") {
    CHECK(kronecker(Int(5), Int(2)) == -1);  // 5 = 5 mod 8
    CHECK(kronecker(Int(145), Int(2)) == 1); // 145 = 1 mod 8
    CHECK(kronecker(Int(44), Int(2)) == 0);
    CHECK(kronecker(Int(-4), Int(3)) == -1);
    CHECK(kronecker(Int(-4), Int(5)) == 1);
    CHECK(kronecker(Int(12), Int(7)) == -1);
    // multiplicativity in the bottom argument
    for (long a : {5L, 13L, 21L, -7L})
        for (long m : {3L, 5L, 7L, 11L})
            for (long n : {3L, 5L, 9L})
                CHECK(kronecker(Int(a), Int(m * n)) ==
                      kronecker(Int(a), Int(m)) * kronecker(Int(a), Int(n)));
}

TEST_CASE("dirichlet characters") {
    DirichletChar triv = DirichletChar::trivial();
    CHECK(triv.modulus() == 1);
    CHECK(triv.is_even());

    DirichletChar chi5 = DirichletChar::kronecker_char(5);
    CHECK(chi5.is_even());
    CHECK(chi5.value_real(Int(2)) == -1);
    CHECK(chi5.value_real(Int(4)) == 1);
    CHECK(chi5.value_real(Int(5)) == 0);
    CHECK(chi5.conductor() == 5);

    DirichletChar omega = DirichletChar::omega();
    CHECK_FALSE(omega.is_even());
    CHECK(omega.value_real(Int(7)) == -1);

    // conductor of an imprimitive product: chi5 * chi5 is trivial mod 5
    DirichletChar sq = chi5 * chi5;
    CHECK(sq.conductor() == 1);
    CHECK(sq.primitive_part() == DirichletChar::trivial());

    // chi12 = chi(-4)*chi(-3): fundamental discriminant 12
    DirichletChar chi12 = DirichletChar::kronecker_char(12);
    CHECK(chi12.is_even());
    CHECK(chi12.conductor() == 12);
}

TEST_CASE("generalized Bernoulli numbers") {
    CHECK(gen_bernoulli(2, DirichletChar::trivial()) == Rat(1, 6));
    CHECK(gen_bernoulli(1, DirichletChar::trivial()) == Rat(1, 2));

    DirichletChar chi5 = DirichletChar::kronecker_char(5);
    // parity mismatch: chi even, n odd (n >= 2 case: n = 3)
    CHECK(gen_bernoulli(3, chi5) == 0);
    CHECK(gen_bernoulli(2, chi5) == Rat(4, 5));

    // B_{1,chi} against the finite character-sum formula
    // L(0, chi) = -B_{1,chi} = -(1/f) sum_a chi(a) a  for odd chi
    DirichletChar omega = DirichletChar::omega();
    Rat direct(0);
    for (long a = 1; a <= 4; ++a)
        direct += Rat(omega.value_real(Int(a))) * Rat(a, 4);
    CHECK(gen_bernoulli(1, omega) == direct);
}

TEST_CASE("2-adic abelian L-values") {
    // S-truncation: adding a prime multiplies by (1 - chi_n(p) p^{n-1})
    DirichletChar chi5 = DirichletChar::kronecker_char(5);
    for (std::size_t n = 1; n <= 4; ++n) {
        Rat base = abelian_L_2adic_exact(n, chi5, {});
        Rat trunc = abelian_L_2adic_exact(n, chi5, {11});
        DirichletChar chi_n = (n % 2) ? (chi5 * DirichletChar::omega()).primitive_part() : chi5;
        Rat factor = Rat(1) - Rat(chi_n.value_real(Int(11))) * Rat(int_pow(Int(11), n - 1));
        CHECK(trunc == base * factor);
    }

    // odd character rejected
    CHECK_THROWS(abelian_L_2adic_exact(2, DirichletChar::omega(), {}));

    // the classical value behind the 2-adic one: for even chi and even n,
    // L_2(1-n, chi) = -(1 - chi(2) 2^{n-1}) B_{n,chi}/n
    DirichletChar chi145 = DirichletChar::kronecker_char(145);
    Rat lhs = abelian_L_2adic_exact(2, chi145, {});
    Rat rhs = -(Rat(1) - Rat(chi145.value_real(Int(2))) * 2) * gen_bernoulli(2, chi145) / 2;
    CHECK(lhs == rhs);
}
