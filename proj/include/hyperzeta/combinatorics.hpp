#pragma once

// Exact rational combinatorics: multiple harmonic sums H_k(mu), harmonic
// numbers, the balancing coefficients c^m_{mu,k}, Pochhammer symbols, the
// generating function F_k(s) = k!/(1-s)_k and Bernoulli numbers.

#include <vector>

#include <gmpxx.h>

#include "hyperzeta/bignum.hpp"

namespace hyperzeta {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Truncated power series in s with exact coefficients; coeffs[j] multiplies s^j.
struct RationalSeries {
    std::vector<Rational> coeffs;

    int order() const noexcept { return static_cast<int>(coeffs.size()); }
    const Rational& operator[](int j) const { return coeffs.at(static_cast<std::size_t>(j)); }
};

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
/// Multiplicative inverse; throws DivisionByZeroSeries when the constant term vanishes.
RationalSeries inverse(const RationalSeries& a);

/// Memoisation bound for multi_harmonic; larger arguments are computed without caching.
inline constexpr int kHarmonicMemoBound = 64;

/// Non-strict multiple harmonic sum over 0 < j_1 <= ... <= j_mu <= k.
/// H_k(0) = 1 for every k >= 0 and H_0(mu) = 0 for mu >= 1.
Rational multi_harmonic(int k, int mu);

/// Classical harmonic number 1 + 1/2 + ... + 1/N.
Rational harmonic(int N);

/// c^m_{mu,k} = (-1)^k/k! * m!/(m-mu)! * H_k(mu). Throws IndexError unless 0 <= mu <= m.
Rational coeff_c(int m, int mu, int k);

/// Rising factorial a (a+1) ... (a+k-1).
Rational pochhammer(const Rational& a, int k);

/// Series of k!/(1-s)_k = prod_{j=1..k} 1/(1 - s/j), truncated to `order` terms.
RationalSeries gen_F(int k, int order);

BigInt factorial(int n);
BigInt binomial(int n, int k);
/// Unsigned Stirling numbers of the first kind, [s^k] (s)_n.
BigInt stirling1_unsigned(int n, int k);
/// Bernoulli numbers with B_1 = -1/2.
Rational bernoulli_number(int n);

BigReal to_real(const Rational& q, int bits);
BigReal to_real(const BigInt& z, int bits);
inline BigComplex to_complex(const Rational& q, int bits) { return BigComplex(to_real(q, bits)); }

}  // namespace hyperzeta
