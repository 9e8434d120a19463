#pragma once

#include "hyperzeta/bignum.hpp"

namespace hyperzeta {

/// Euler's constant by Euler-Maclaurin summation of the harmonic series.
/// Accurate to the policy's working precision (and therefore to target_abs_error).
/// Throws PrecisionUnreachable if the remainder bound cannot be met.
BigComplex const_gamma(const PrecisionPolicy& p);
BigReal euler_gamma(int bits);

/// Riemann zeta at an integer j >= 2 by Euler-Maclaurin with a remainder bound.
BigComplex const_zeta_int(int j, const PrecisionPolicy& p);
BigReal zeta_int(int j, int bits);

BigReal const_pi(int bits);

}  // namespace hyperzeta
