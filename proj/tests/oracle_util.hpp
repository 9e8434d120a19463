#pragma once

// Small helpers shared by the unit tests. Everything here is computed
// independently of the library's analytic code paths (MPFR directly or
// exact enumeration).

#include <cmath>
#include <functional>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

#include "hyperzeta/bignum.hpp"

namespace oracle {

using hyperzeta::BigComplex;
using hyperzeta::BigReal;

inline double rel_err(const BigComplex& a, const BigComplex& b) {
    const double s = std::max(abs(b).to_double(), 1e-300);
    return abs(a - b).to_double() / s;
}

inline double abs_err(const BigComplex& a, const BigComplex& b) { return abs(a - b).to_double(); }

inline BigReal mpfr_call(int bits, const std::function<void(mpfr_ptr)>& f) {
    BigReal r(bits);
    f(r.raw());
    return r;
}

inline BigReal euler(int bits) {
    return mpfr_call(bits, [](mpfr_ptr x) { mpfr_const_euler(x, MPFR_RNDN); });
}

inline BigReal riemann_zeta(double s, int bits) {
    BigReal sv(s, bits);
    return mpfr_call(bits, [&](mpfr_ptr x) { mpfr_zeta(x, sv.raw(), MPFR_RNDN); });
}

inline BigReal riemann_zeta_ui(unsigned long j, int bits) {
    return mpfr_call(bits, [&](mpfr_ptr x) { mpfr_zeta_ui(x, j, MPFR_RNDN); });
}

inline BigReal lngamma(const BigReal& v) {
    return mpfr_call(v.bits(), [&](mpfr_ptr x) { mpfr_lngamma(x, v.raw(), MPFR_RNDN); });
}

inline BigReal gamma(const BigReal& v) {
    return mpfr_call(v.bits(), [&](mpfr_ptr x) { mpfr_gamma(x, v.raw(), MPFR_RNDN); });
}

// Non-strict chains 0 < j_1 <= ... <= j_mu <= k, summed by brute force.
inline mpq_class harmonic_by_enumeration(int k, int mu) {
    if (mu == 0) return 1;
    mpq_class total = 0;
    std::vector<int> j(static_cast<std::size_t>(mu), 1);
    if (k == 0) return 0;
    while (true) {
        mpq_class term = 1;
        for (int v : j) term /= v;
        total += term;
        int pos = mu - 1;
        while (pos >= 0 && j[static_cast<std::size_t>(pos)] == k) --pos;
        if (pos < 0) break;
        const int nv = j[static_cast<std::size_t>(pos)] + 1;
        for (int q = pos; q < mu; ++q) j[static_cast<std::size_t>(q)] = nv;
    }
    return total;
}

// Classical Bernoulli polynomials by the explicit double sum
// B_n(x) = sum_{k=0}^n 1/(k+1) sum_{j=0}^k (-1)^j C(k,j) (x+j)^n.
inline BigComplex bernoulli_poly(int n, const BigComplex& x) {
    const int bits = x.bits();
    BigComplex total(bits);
    for (int k = 0; k <= n; ++k) {
        BigComplex inner(bits);
        mpz_class c = 1;
        for (int j = 0; j <= k; ++j) {
            BigComplex t = pow(x + static_cast<long>(j), static_cast<long>(n));
            t = t * BigReal(static_cast<long>(c.get_si()), bits);
            inner = (j % 2) ? inner - t : inner + t;
            c = c * (k - j) / (j + 1);
        }
        total = total + inner / static_cast<long>(k + 1);
    }
    return total;
}

}  // namespace oracle
