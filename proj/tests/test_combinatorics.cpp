#include <doctest.h>

#include "hyperzeta/combinatorics.hpp"
#include "hyperzeta/errors.hpp"
#include "oracle_util.hpp"

using namespace hyperzeta;

TEST_CASE("multi_harmonic matches enumeration of chains") {
    for (int k = 0; k <= 7; ++k) {
        for (int mu = 0; mu <= 5; ++mu) {
            CAPTURE(k);
            CAPTURE(mu);
            CHECK(multi_harmonic(k, mu) == oracle::harmonic_by_enumeration(k, mu));
        }
    }
    CHECK(multi_harmonic(2, 2) == Rational(7, 4));
    CHECK(multi_harmonic(0, 0) == 1);
    CHECK(multi_harmonic(0, 3) == 0);
    CHECK(multi_harmonic(5, 1) == harmonic(5));
}

TEST_CASE("harmonic recurrence holds exactly") {
    for (int k = 1; k <= 12; ++k) {
        for (int mu = 1; mu <= 8; ++mu) {
            CHECK(k * multi_harmonic(k, mu) - multi_harmonic(k, mu - 1) - k * multi_harmonic(k - 1, mu) == 0);
        }
    }
}

TEST_CASE("beyond the memo bound") {
    CHECK(multi_harmonic(70, 1) == harmonic(70));
    CHECK(70 * multi_harmonic(70, 2) - multi_harmonic(70, 1) - 70 * multi_harmonic(69, 2) == 0);
}

TEST_CASE("balancing coefficients") {
    CHECK(harmonic(2) == Rational(3, 2));
    CHECK(coeff_c(2, 1, 2) == Rational(3, 2));
    CHECK(coeff_c(3, 0, 0) == 1);
    CHECK(coeff_c(1, 1, 1) == -1);
    CHECK_THROWS_AS(coeff_c(2, 3, 0), IndexError);
    CHECK_THROWS_AS(coeff_c(2, -1, 0), IndexError);
}

TEST_CASE("pochhammer and F_k") {
    CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
    CHECK(pochhammer(Rational(5), 0) == 1);
    const RationalSeries f3 = gen_F(3, 3);
    CHECK(f3[0] == 1);
    CHECK(f3[1] == Rational(11, 6));
    const RationalSeries f2 = gen_F(2, 3);
    CHECK(f2[2] == Rational(7, 4));
    // k!/(1-s)_k times (1-s)_k/k! is 1
    for (int k = 0; k <= 6; ++k) {
        RationalSeries poch{std::vector<Rational>(8, Rational(0))};
        poch.coeffs[0] = 1;
        for (int j = 1; j <= k; ++j) {  // multiply by (1 - s/j)
            for (int i = 7; i >= 1; --i) poch.coeffs[i] -= poch.coeffs[i - 1] / j;
        }
        const RationalSeries prod = gen_F(k, 8) * poch;
        CHECK(prod[0] == 1);
        for (int i = 1; i < 8; ++i) CHECK(prod[i] == 0);
    }
    for (int k = 0; k <= 10; ++k) {
        const RationalSeries f = gen_F(k, 11);
        for (int mu = 0; mu <= 10; ++mu) CHECK(f[mu] == multi_harmonic(k, mu));
    }
}

TEST_CASE("series inverse") {
    RationalSeries a{{Rational(0), Rational(1)}};
    CHECK_THROWS_AS(inverse(a), DivisionByZeroSeries);
}

TEST_CASE("integer sequences") {
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    CHECK(stirling1_unsigned(4, 2) == 11);
    CHECK(stirling1_unsigned(5, 5) == 1);
    CHECK(stirling1_unsigned(5, 0) == 0);
    CHECK(bernoulli_number(0) == 1);
    CHECK(bernoulli_number(1) == Rational(-1, 2));
    CHECK(bernoulli_number(2) == Rational(1, 6));
    CHECK(bernoulli_number(3) == 0);
    CHECK(bernoulli_number(12) == Rational(-691, 2730));
}

TEST_CASE("exact to floating") {
    const BigReal third = to_real(Rational(1, 3), 192);
    CHECK(abs(third * 3L - BigReal(1L, 192)).to_double() < 1e-56);
}
