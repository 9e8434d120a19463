#pragma once

// Laurent expansion of e^{-wt} / prod_i (1 - e^{-omega_i t}) and its
// coefficients, the multiple Bernoulli polynomials a_{r,N}(w; omega).

#include <vector>

#include "hyperzeta/bignum.hpp"
#include "hyperzeta/combinatorics.hpp"
#include "hyperzeta/series.hpp"

namespace hyperzeta {

/// Period tuple (omega_1, ..., omega_r), each with positive real part.
class OmegaVector {
public:
    OmegaVector() = default;
    /// Throws InvalidParameter if some Re(omega_i) <= 0.
    explicit OmegaVector(std::vector<BigComplex> omegas);
    static OmegaVector from_doubles(const std::vector<double>& values, int bits);

    int r() const noexcept { return static_cast<int>(omegas_.size()); }
    bool empty() const noexcept { return omegas_.empty(); }
    const std::vector<BigComplex>& omegas() const noexcept { return omegas_; }
    const BigComplex& operator[](int i) const { return omegas_.at(static_cast<std::size_t>(i)); }

    /// omega_1 * ... * omega_r (1 for r = 0).
    BigComplex product(int bits) const;
    /// min_i |2 pi / omega_i|; +infinity for r = 0.
    BigReal pole_bound(int bits) const;

    /// (omega, alpha) concatenated.
    OmegaVector concat(const OmegaVector& other) const;
    /// Drops the component at index i.
    OmegaVector without(int i) const;

private:
    std::vector<BigComplex> omegas_;
};

struct BernoulliExpansion {
    OmegaVector base;
    BigComplex w;
    /// Valuation -r; coefficient of t^N is a_{r,N}(w; omega).
    LaurentSeries series;

    BigComplex a(int N) const { return series.coeff(N); }
};

/// prod_i 1/(1 - e^{-omega_i t}) with valuation -r, known up to t^order (exclusive).
LaurentSeries f_omega_series(const OmegaVector& omega, int order, int bits);

/// e^{-wt} f_omega(t) known up to t^order (exclusive). Requires order > -r.
BernoulliExpansion bernoulli_expansion(const OmegaVector& omega, const BigComplex& w, int order);

/// a_{r,N}(w; omega). Throws IndexError if N < -r.
BigComplex bernoulli_a(const OmegaVector& omega, int N, const BigComplex& w);

/// Exact path for rational omega and w. Returns coefficients of t^{-r} ... t^{order-1}.
std::vector<Rational> bernoulli_expansion_exact(const std::vector<Rational>& omega, const Rational& w, int order);

}  // namespace hyperzeta
