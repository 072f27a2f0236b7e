#include "az/exact.hpp"

#include <doctest.h>

using az::Int;
using az::Rat;

namespace {

// Independent oracles, kept deliberately naive.

Int naive_factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i)
        r *= i;
    return r;
}

// Falling-factorial binomial, the definition itself.
Rat falling_binomial(long a, long k) {
    if (k < 0)
        return Rat(0);
    Rat r(1);
    for (long t = 0; t < k; ++t)
        r *= Rat(Int(a - t), Int(t + 1));
    return r;
}

Rat naive_harmonic(long n) {
    Rat h(0);
    for (long j = 1; j <= n; ++j)
        h += Rat(1, j);
    return h;
}

}  // namespace

TEST_CASE("factorial basics and memoization") {
    CHECK(az::factorial(0) == 1);
    CHECK(az::factorial(5) == 120);
    CHECK(az::factorial(13) == Int("6227020800"));
    for (long n : {0L, 1L, 7L, 13L, 40L})
        CHECK(az::factorial(n) == naive_factorial(n));
    CHECK(az::factorial(13) == az::factorial(13));  // second call hits the memo
    CHECK_THROWS_AS(az::factorial(-1), std::domain_error);
}

TEST_CASE("generalized binomial") {
    CHECK(az::binomial(-1, 3) == -1);
    CHECK(az::binomial(5, 2) == 10);
    CHECK(az::binomial(4, 7) == 0);
    CHECK(az::binomial(-3, 7) == -36);  // (r-p, r+p) at r=2, p=5
    CHECK(az::binomial(17, -2) == 0);
    CHECK(az::binomial(-4, -1) == 0);

    for (long a = -12; a <= 12; ++a)
        for (long k = 0; k <= 15; ++k) {
            Rat expect = falling_binomial(a, k);
            REQUIRE(expect.is_integer());
            CHECK(az::binomial(a, k) == expect.num());
        }
}

TEST_CASE("binomial recurrence on signed upper arguments") {
    for (long a = -20; a <= 20; ++a)
        for (long k = 0; k <= 40; ++k)
            CHECK(az::binomial(a, k) ==
                  az::binomial(a - 1, k - 1) + az::binomial(a - 1, k));
}

TEST_CASE("binomial product identity C(n,k)C(n+k,k) = C(2k,k)C(n+k,2k)") {
    for (long n = 0; n <= 30; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(az::binomial(n, k) * az::binomial(n + k, k) ==
                  az::binomial(2 * k, k) * az::binomial(n + k, 2 * k));
}

TEST_CASE("trinomial and equal-part multinomial") {
    CHECK(az::trinomial(0) == 1);
    CHECK(az::trinomial(1) == 6);
    CHECK(az::trinomial(3) == naive_factorial(9) / (naive_factorial(3) * naive_factorial(3) * naive_factorial(3)));
    CHECK(az::trinomial(3) == 1680);

    CHECK(az::multinomial_equal(2, 3) == 20);
    CHECK(az::multinomial_equal(4, 2) == naive_factorial(8) / (naive_factorial(2) * naive_factorial(2) * naive_factorial(2) * naive_factorial(2)));
    CHECK(az::multinomial_equal(4, 2) == 2520);
    for (long k = 0; k <= 20; ++k)
        CHECK(az::trinomial(k) == az::multinomial_equal(3, k));
    CHECK_THROWS_AS(az::multinomial_equal(0, 1), std::domain_error);
    CHECK_THROWS_AS(az::multinomial_equal(3, -1), std::domain_error);
}

TEST_CASE("harmonic numbers") {
    CHECK(az::harmonic(0) == Rat(0));
    CHECK(az::harmonic(3) == Rat(11, 6));
    CHECK(az::harmonic(6) == naive_harmonic(6));
    CHECK(az::harmonic(6) == Rat(49, 20));
    for (long n = 1; n <= 200; ++n)
        CHECK(az::harmonic(n) - az::harmonic(n - 1) == Rat(1, n));
}

TEST_CASE("pow_rat") {
    CHECK(az::pow_rat(Rat(3), 4) == Rat(81));
    CHECK(az::pow_rat(Rat(1, 3), -2) == Rat(9));
    CHECK(az::pow_rat(Rat(3), -3) == Rat(1, 27));
    CHECK(az::pow_rat(Rat(-2, 7), 3) == Rat(-8, 343));
    CHECK(az::pow_rat(Rat(0), 5) == Rat(0));
    CHECK(az::pow_rat(Rat(17, 5), 0) == Rat(1));
    CHECK_THROWS_AS(az::pow_rat(Rat(0), -1), std::domain_error);
}

TEST_CASE("Rat normalization and string form") {
    Rat r(Int(-6), Int(-8));
    CHECK(r.num() == 3);
    CHECK(r.den() == 4);
    CHECK(Rat(4, 2).str() == "2");
    CHECK(Rat(-80, 81).str() == "-80/81");
    CHECK(Rat::parse("-80/81") == Rat(-80, 81));
    CHECK(Rat::parse("42") == Rat(42));
    CHECK(Rat::parse("6/-8") == Rat(-3, 4));
    CHECK_THROWS_AS(Rat(Int(1), Int(0)), std::domain_error);
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
    CHECK(Rat(1, 3) + Rat(2, 3) == Rat(1));
    CHECK(Rat(1, 2) - Rat(2) == Rat(-3, 2));
    CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
    CHECK(Rat(1, 3) < Rat(1, 2));
}
