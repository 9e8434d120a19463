#include <doctest.h>

#include "hyperzeta/constants.hpp"
#include "oracle_util.hpp"

using namespace hyperzeta;

TEST_CASE("Euler's constant against MPFR") {
    for (int bits : {64, 192, 320}) {
        const BigReal g = euler_gamma(bits);
        CHECK(abs(g - oracle::euler(bits)).to_double() < std::ldexp(1.0, -bits + 3));
    }
}

TEST_CASE("zeta at integers against MPFR and closed forms") {
    const int bits = 192;
    for (unsigned j = 2; j <= 20; ++j) {
        CAPTURE(j);
        CHECK(abs(zeta_int(static_cast<int>(j), bits) - oracle::riemann_zeta_ui(j, bits)).to_double() < 1e-55);
    }
    const BigReal pi = BigReal::pi(bits);
    CHECK(abs(zeta_int(2, bits) - pi * pi / 6L).to_double() < 1e-55);
    CHECK(abs(zeta_int(4, bits) - pow(pi, 4L) / 90L).to_double() < 1e-55);
}

TEST_CASE("policy entry points and precision doubling") {
    const PrecisionPolicy p = PrecisionPolicy::with_bits(128);
    const PrecisionPolicy q = PrecisionPolicy::with_bits(256);
    CHECK(oracle::abs_err(const_gamma(p), const_gamma(q).with_bits(128)) < p.target_abs_error);
    for (int j : {2, 3, 7}) {
        CHECK(oracle::abs_err(const_zeta_int(j, p), const_zeta_int(j, q).with_bits(128)) < p.target_abs_error);
    }
    CHECK(euler_gamma(192).to_string(20).rfind("5.7721566490153286061", 0) == 0);
}
