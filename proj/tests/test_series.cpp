#include <doctest.h>

#include <random>

#include "hyperzeta/errors.hpp"
#include "hyperzeta/series.hpp"
#include "oracle_util.hpp"

using namespace hyperzeta;

namespace {
constexpr int kBits = 192;
BigComplex c(double re, double im = 0) { return BigComplex(re, im, kBits); }
}  // namespace

TEST_CASE("coefficient access") {
    LaurentSeries s(-1, 3, kBits);
    s.set_coeff(-1, c(2));
    CHECK(s.valuation() == -1);
    CHECK(s.order() == 3);
    CHECK(s.coeff(-3).is_zero());
    CHECK(s.coeff(-1).real().to_double() == 2.0);
    CHECK_THROWS_AS(s.coeff(3), IndexError);
}

TEST_CASE("exp and log are inverse") {
    LaurentSeries a(1, 12, kBits);
    a.set_coeff(1, c(0.5, 0.25));
    a.set_coeff(2, c(-1.0));
    a.set_coeff(5, c(0.125));
    const LaurentSeries back = series_log(series_exp(a));
    for (int n = 0; n < 12; ++n) CHECK(oracle::abs_err(back.coeff(n), a.coeff(n)) < 1e-55);
}

TEST_CASE("exp of a linear jet") {
    const LaurentSeries e = LaurentSeries::exp_linear(c(2), 8);
    BigComplex fact = c(1);
    for (int n = 0; n < 8; ++n) {
        if (n) fact = fact * static_cast<long>(n);
        CHECK(oracle::rel_err(e.coeff(n), pow(c(2), static_cast<long>(n)) / fact) < 1e-55);
    }
}

TEST_CASE("division recovers the numerator") {
    LaurentSeries a(0, 10, kBits), b(1, 11, kBits);
    for (int n = 0; n < 10; ++n) a.set_coeff(n, c(1.0 / (n + 1), n));
    for (int n = 1; n < 11; ++n) b.set_coeff(n, c(n % 3 - 0.5, 0.1 * n));
    const LaurentSeries q = a / b;
    CHECK(q.valuation() == -1);
    const LaurentSeries back = q * b;
    for (int n = 0; n < std::min(back.order(), 10); ++n) CHECK(oracle::abs_err(back.coeff(n), a.coeff(n)) < 1e-50);
}

TEST_CASE("division by zero") {
    LaurentSeries a = LaurentSeries::constant(c(1), 4);
    LaurentSeries z(0, 4, kBits);
    CHECK_THROWS_AS(a / z, DivisionByZeroSeries);
}

TEST_CASE("domain errors") {
    LaurentSeries pole(-1, 3, kBits);
    pole.set_coeff(-1, c(1));
    CHECK_THROWS_AS(series_exp(pole), DomainError);
    LaurentSeries nc(1, 4, kBits);
    nc.set_coeff(1, c(1));
    CHECK_THROWS_AS(series_log(nc), DomainError);
}

TEST_CASE("derivative and shift") {
    LaurentSeries a(0, 5, kBits);
    for (int n = 0; n < 5; ++n) a.set_coeff(n, c(n + 1));
    const LaurentSeries d = a.derivative();
    CHECK(d.coeff(0).real().to_double() == 2.0);
    CHECK(d.coeff(3).real().to_double() == 20.0);
    const LaurentSeries s = a.shifted(-2);
    CHECK(s.valuation() == -2);
    CHECK(s.coeff(-2).real().to_double() == 1.0);
}

namespace {
LaurentSeries poly(int val, std::vector<double> cs, int order) {
    LaurentSeries s(val, order, kBits);
    for (std::size_t i = 0; i < cs.size() && val + static_cast<int>(i) < order; ++i) s.set_coeff(val + static_cast<int>(i), c(cs[i]));
    return s;
}
bool near(const LaurentSeries& a, const LaurentSeries& b, double tol = 1e-50) {
    const int lo = std::min(a.valuation(), b.valuation());
    const int hi = std::min(a.order(), b.order());
    for (int n = lo; n < hi; ++n) {
        if (oracle::abs_err(a.coeff(n), b.coeff(n)) > tol) return false;
    }
    return true;
}
}  // namespace

TEST_CASE("addition examples") {
    const LaurentSeries a = poly(-1, {1, 1}, 4), b = poly(-1, {-1}, 4);
    const LaurentSeries s = series_add(a, b);
    CHECK(near(s, LaurentSeries::constant(c(1), 4)));
    CHECK(s.order() == 4);
    CHECK(near(series_add(poly(0, {1, 1}, 3), poly(0, {1, -1}, 5)), LaurentSeries::constant(c(2), 3)));
    CHECK(series_add(poly(0, {1, 1}, 3), poly(0, {1, -1}, 5)).order() == 3);
}

TEST_CASE("multiplication examples") {
    const LaurentSeries p = series_mul(poly(0, {1, 1}, 4), poly(0, {1, -1}, 4));
    CHECK(near(p, poly(0, {1, 0, -1}, 4)));
    const LaurentSeries q = series_mul(poly(-1, {1}, 3), poly(1, {1}, 5));
    CHECK(q.valuation() == 0);
    CHECK(oracle::abs_err(q.coeff(0), c(1)) < 1e-60);
    const LaurentSeries e = LaurentSeries::exp_linear(c(1), 5) * LaurentSeries::exp_linear(c(-1), 5);
    CHECK(near(e, LaurentSeries::constant(c(1), 5)));
    CHECK(e.order() == 5);
}

TEST_CASE("division examples") {
    const BigComplex tpi = BigComplex::two_pi_i(kBits);
    LaurentSeries num(1, 3, kBits);
    num.set_coeff(1, tpi);
    num.set_coeff(2, tpi * tpi / 2L);
    const LaurentSeries q = series_div(num, LaurentSeries::monomial(c(1), 1, 4));
    CHECK(oracle::abs_err(q.coeff(0), tpi) < 1e-55);
    CHECK(oracle::abs_err(q.coeff(1), tpi * tpi / 2L) < 1e-55);

    const LaurentSeries g = series_div(LaurentSeries::constant(c(1), 6), poly(0, {1, -1}, 6));
    for (int n = 0; n < 6; ++n) CHECK(oracle::abs_err(g.coeff(n), c(1)) < 1e-55);

    // (u + gamma u^2)/(2 pi i u + (2 pi i u)^2/2) = 1/(2 pi i) + (gamma - pi i)/(2 pi i) u + ...
    const BigComplex gam(oracle::euler(kBits));
    LaurentSeries a(1, 3, kBits), b(1, 3, kBits);
    a.set_coeff(1, c(1));
    a.set_coeff(2, gam);
    b.set_coeff(1, tpi);
    b.set_coeff(2, tpi * tpi / 2L);
    const LaurentSeries r = series_div(a, b);
    CHECK(r.valuation() == 0);
    CHECK(oracle::abs_err(r.coeff(0), BigComplex(1L, kBits) / tpi) < 1e-55);
    const BigComplex pi_i(BigReal(0L, kBits), BigReal::pi(kBits));
    CHECK(oracle::abs_err(r.coeff(1), (gam - pi_i) / tpi) < 1e-55);
}

TEST_CASE("exp and log examples") {
    CHECK(near(series_exp(LaurentSeries(0, 4, kBits)), LaurentSeries::constant(c(1), 4)));
    const LaurentSeries one_plus_t = poly(0, {1, 1}, 8);
    CHECK(near(series_exp(series_log(one_plus_t)), one_plus_t));
    const LaurentSeries e = series_exp(poly(1, {-2}, 3));
    CHECK(near(e, poly(0, {1, -2, 2}, 3)));
}

TEST_CASE("ring laws and division round trip on random series") {
    std::mt19937_64 gen(42);
    auto u = [&] { return static_cast<double>(gen() >> 11) * 0x1.0p-53 * 2 - 1; };
    auto rnd = [&](int val, int order) {
        LaurentSeries s(val, order, kBits);
        for (int n = val; n < order; ++n) s.set_coeff(n, c(u(), u()));
        s.set_coeff(val, c(1 + u() * 0.5, u()));
        return s;
    };
    const double tol = std::ldexp(1.0, -kBits + 8) * 64;
    for (int trial = 0; trial < 20; ++trial) {
        const LaurentSeries a = rnd(-1, 8), b = rnd(0, 9), d = rnd(1, 10);
        CHECK(near((a * b) * d, a * (b * d), tol));
        CHECK(near(a * (b + d), a * b + a * d, tol));
        CHECK(near(a * b, b * a, tol));
        CHECK(near(a + b, b + a, tol));
        CHECK(near(series_div(series_mul(a, b), b), a, 1e-45));
    }
}
