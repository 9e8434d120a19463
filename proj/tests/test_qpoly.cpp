#include <doctest.h>

#include "hyperzeta/combinatorics.hpp"
#include "hyperzeta/qpoly.hpp"
#include "oracle_util.hpp"

using namespace hyperzeta;

namespace {
const PrecisionPolicy kP;
constexpr int kBits = kDefaultPrecisionBits;
}  // namespace

TEST_CASE("1/Gamma jet against known Taylor coefficients") {
    // 1/Gamma(u) = u + gamma u^2 + (gamma^2/2 - pi^2/12) u^3 + ...
    const LaurentSeries j = recip_gamma_jet(0, 6, kP);
    const BigReal g = oracle::euler(kBits), pi = BigReal::pi(kBits);
    CHECK(abs(j.coeff(0)).to_double() < 1e-60);
    CHECK(oracle::abs_err(j.coeff(1), BigComplex(1L, kBits)) < 1e-55);
    CHECK(oracle::abs_err(j.coeff(2), BigComplex(g)) < 1e-55);
    CHECK(oracle::abs_err(j.coeff(3), BigComplex(g * g / 2L - pi * pi / 12L)) < 1e-55);
    // 1/Gamma(u-1) = (u-1)/Gamma(u): coefficient of u is -1
    const LaurentSeries j1 = recip_gamma_jet(1, 6, kP);
    CHECK(oracle::abs_err(j1.coeff(1), BigComplex(-1L, kBits)) < 1e-55);
}

TEST_CASE("1Q_0 reproduces the log Gamma_r integrand") {
    const PolyC q = q_poly(1, 0, kP);
    CHECK(q.degree() == 1);
    const BigComplex tpi = BigComplex::two_pi_i(kBits);
    CHECK(oracle::abs_err(q.coeff(1, kBits), BigComplex(1L, kBits) / tpi) < 1e-55);
    CHECK(oracle::abs_err(q.coeff(0, kBits), BigComplex(oracle::euler(kBits)) / tpi - BigComplex(0.5, 0, kBits)) <
          1e-55);
}

TEST_CASE("0Q_k is the constant (-1)^k k!/(2 pi i)") {
    const BigComplex tpi = BigComplex::two_pi_i(kBits);
    for (int k = 0; k <= 6; ++k) {
        BigComplex e = BigComplex(to_real(factorial(k), kBits)) / tpi;
        if (k % 2) e = -e;
        CHECK(oracle::rel_err(q_poly(0, k, kP).coeff(0, kBits), e) < 1e-55);
    }
}

TEST_CASE("d/dx mQ_k = m (m-1)Q_k") {
    for (int k = 0; k <= 3; ++k) {
        for (int m = 1; m <= 5; ++m) {
            const PolyC hi = q_poly(m, k, kP), lo = q_poly(m - 1, k, kP);
            for (int d = 1; d <= m; ++d) {
                CHECK(oracle::abs_err(hi.coeff(d, kBits) * static_cast<long>(d), lo.coeff(d - 1, kBits) * static_cast<long>(m)) <
                      1e-50);
            }
        }
    }
}

TEST_CASE("S_{m,k} does not depend on k") {
    for (int m = 0; m <= 6; ++m) {
        const PolyC q0 = q_poly(m, 0, kP);
        for (int k = 0; k <= 6; ++k) {
            const PolyC s = s_poly(m, k, kP);
            for (int d = 0; d <= m; ++d) CHECK(oracle::rel_err(s.coeff(d, kBits), q0.coeff(d, kBits)) < 1e-30);
        }
    }
}

TEST_CASE("polynomial helpers") {
    const PolyC p({BigComplex(1L, kBits), BigComplex(2L, kBits), BigComplex(3L, kBits)});
    const BigComplex x(0.5, 1.0, kBits);
    CHECK(oracle::abs_err(p(x), BigComplex(1L, kBits) + x * 2L + x * x * 3L) < 1e-55);
    const BigComplex c(-0.25, 0.5, kBits);
    CHECK(oracle::abs_err(p.shifted(c)(x), p(x + c)) < 1e-55);
    CHECK(oracle::abs_err((p - p)(x), BigComplex(kBits)) < 1e-60);
}
