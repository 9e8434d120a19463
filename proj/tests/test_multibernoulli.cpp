#include <doctest.h>

#include "hyperzeta/errors.hpp"
#include "hyperzeta/multibernoulli.hpp"
#include "oracle_util.hpp"

using namespace hyperzeta;

namespace {
constexpr int kBits = 192;
}

TEST_CASE("omega vector invariants") {
    CHECK_THROWS_AS(OmegaVector::from_doubles({1.0, -0.5}, kBits), InvalidParameter);
    CHECK_THROWS_AS(OmegaVector({BigComplex(0.0, 1.0, kBits)}), InvalidParameter);
    const OmegaVector om = OmegaVector::from_doubles({2.0, 0.5}, kBits);
    CHECK(om.product(kBits).real().to_double() == 1.0);
    CHECK(om.pole_bound(kBits).to_double() == doctest::Approx(M_PI));
    CHECK(OmegaVector().product(kBits).real().to_double() == 1.0);
    CHECK_FALSE(OmegaVector().pole_bound(kBits).is_finite());
    CHECK(om.concat(om).r() == 4);
    CHECK(om.without(0)[0].real().to_double() == 0.5);
}

TEST_CASE("f_omega for omega = (1) is x/(1 - e^{-x}) / x") {
    const LaurentSeries f = f_omega_series(OmegaVector::from_doubles({1.0}, kBits), 6, kBits);
    CHECK(f.valuation() == -1);
    // x/(1-e^{-x}) = 1 + x/2 + x^2/12 - x^4/720 + ...
    CHECK(oracle::abs_err(f.coeff(-1), BigComplex(1L, kBits)) < 1e-55);
    CHECK(oracle::abs_err(f.coeff(0), BigComplex(0.5, 0, kBits)) < 1e-55);
    CHECK(oracle::abs_err(f.coeff(1), BigComplex(1L, kBits) / 12L) < 1e-55);
    CHECK(abs(f.coeff(2)).to_double() < 1e-55);
    CHECK(oracle::abs_err(f.coeff(3), BigComplex(-1L, kBits) / 720L) < 1e-55);
}

TEST_CASE("r = 1 coefficients are Bernoulli polynomials") {
    // e^{-wt}/(1-e^{-t}) = sum_n (-1)^n B_n(w) t^{n-1}/n!
    const OmegaVector one = OmegaVector::from_doubles({1.0}, kBits);
    for (double wv : {0.25, 0.5, 1.0, 3.7}) {
        const BigComplex w(wv, 0.0, kBits);
        const BernoulliExpansion ex = bernoulli_expansion(one, w, 10);
        BigComplex fact(1L, kBits);
        for (int n = 0; n <= 10; ++n) {
            if (n) fact = fact * static_cast<long>(n);
            BigComplex expect = oracle::bernoulli_poly(n, w) / fact;
            if (n % 2) expect = -expect;
            CAPTURE(n);
            CHECK(oracle::abs_err(ex.a(n - 1), expect) < 1e-50);
        }
    }
    // value used by the 1/w coefficient experiment: a_{1,2}(1/4; 1) = -B_3(1/4)/6 = -1/128
    CHECK(oracle::rel_err(bernoulli_a(one, 2, BigComplex(0.25, 0, kBits)), BigComplex(-1.0 / 128, 0, kBits)) < 1e-55);
}

TEST_CASE("floating expansion agrees with the exact rational one") {
    const std::vector<Rational> om_q{Rational(1, 2), Rational(3, 2), Rational(5, 4)};
    const Rational wq(7, 3);
    const auto exact = bernoulli_expansion_exact(om_q, wq, 6);
    std::vector<BigComplex> om;
    for (const auto& q : om_q) om.emplace_back(to_real(q, kBits));
    const BernoulliExpansion ex = bernoulli_expansion(OmegaVector(om), BigComplex(to_real(wq, kBits)), 6);
    REQUIRE(exact.size() == 9);
    for (int N = -3; N < 6; ++N) {
        CHECK(oracle::rel_err(ex.a(N), to_complex(exact[static_cast<std::size_t>(N + 3)], kBits)) < 1e-50);
    }
}

TEST_CASE("symmetric in the periods") {
    const BigComplex w(1.3, 0.2, kBits);
    const OmegaVector a({BigComplex(0.7, 0.1, kBits), BigComplex(1.9, 0, kBits)});
    const OmegaVector b({BigComplex(1.9, 0, kBits), BigComplex(0.7, 0.1, kBits)});
    for (int N = -2; N < 5; ++N) CHECK(oracle::rel_err(bernoulli_a(a, N, w), bernoulli_a(b, N, w)) < 1e-50);
}

TEST_CASE("leading coefficient is 1/prod(omega)") {
    const OmegaVector om = OmegaVector::from_doubles({0.5, 2.5}, kBits);
    const BigComplex lead = bernoulli_a(om, -2, BigComplex(3L, kBits));
    CHECK(oracle::rel_err(lead, BigComplex(4L, kBits) / 5L) < 1e-55);
    CHECK_THROWS_AS(bernoulli_a(om, -3, BigComplex(1L, kBits)), IndexError);
}

TEST_CASE("r = 0 is the exponential series") {
    const BigComplex w(0.75, 0, kBits);
    const BernoulliExpansion ex = bernoulli_expansion(OmegaVector(), w, 5);
    CHECK(oracle::abs_err(ex.a(0), BigComplex(1L, kBits)) < 1e-55);
    CHECK(oracle::abs_err(ex.a(2), w * w / 2L) < 1e-55);
}

TEST_CASE("shifting w by the last period peels it off") {
    const BigComplex w(0.4, 0.3, kBits);
    for (int r = 1; r <= 3; ++r) {
        std::vector<BigComplex> oms;
        for (int i = 0; i < r; ++i) oms.emplace_back(0.6 + 0.45 * i, 0.1 * i, kBits);
        const OmegaVector om(oms);
        const OmegaVector tail = om.without(r - 1);
        const BernoulliExpansion a = bernoulli_expansion(om, w, 6);
        const BernoulliExpansion b = bernoulli_expansion(om, w + om[r - 1], 6);
        const BernoulliExpansion c = bernoulli_expansion(tail, w, 6);
        for (int N = -r; N < 6; ++N) CHECK(oracle::abs_err(a.a(N) - b.a(N), c.a(N)) < 1e-50);
    }
}

TEST_CASE("d/dw a_N = -a_{N-1}") {
    const OmegaVector om = OmegaVector::from_doubles({1.0, 1.7}, kBits);
    const BigComplex w(0.9, -0.2, kBits);
    const BigComplex h(1e-20, 0, kBits);
    for (int N = -1; N <= 6; ++N) {
        const BigComplex fd = (bernoulli_a(om, N, w + h) - bernoulli_a(om, N, w - h)) / (h * 2L);
        CHECK(oracle::abs_err(fd, -bernoulli_a(om, N - 1, w)) < 1e-30);
    }
}

TEST_CASE("sample values") {
    CHECK(oracle::abs_err(bernoulli_a(OmegaVector(), 2, BigComplex(3L, kBits)), BigComplex(4.5, 0, kBits)) < 1e-55);
    CHECK(oracle::abs_err(bernoulli_a(OmegaVector::from_doubles({1.0, 2.0}, kBits), -2, BigComplex(0L, kBits)),
                          BigComplex(0.5, 0, kBits)) < 1e-55);
    const BigComplex w(0.3, 0.2, kBits);
    CHECK(oracle::abs_err(bernoulli_a(OmegaVector::from_doubles({1.0}, kBits), 0, w), BigComplex(0.5, 0, kBits) - w) < 1e-55);
}
