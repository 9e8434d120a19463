#pragma once

// Polynomials mQ_k(x) and S_{m,k}(x) read off from the generating function
//   e^{(s+k)x} / (Gamma(s) (e^{2 pi i s} - 1)) = sum_m mQ_k(x)/m! (s+k)^m.

#include <vector>

#include "hyperzeta/bignum.hpp"
#include "hyperzeta/series.hpp"

namespace hyperzeta {

/// Polynomial in one variable; coeffs[d] multiplies x^d.
class PolyC {
public:
    PolyC() = default;
    explicit PolyC(std::vector<BigComplex> coeffs) : coeffs_(std::move(coeffs)) {}
    static PolyC monomial(const BigComplex& c, int degree);

    /// Index of the highest stored coefficient (-1 for the empty polynomial).
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigComplex>& coeffs() const noexcept { return coeffs_; }
    const BigComplex& operator[](int d) const { return coeffs_.at(static_cast<std::size_t>(d)); }
    /// Coefficient of x^d, zero past the degree.
    BigComplex coeff(int d, int bits) const;

    BigComplex operator()(const BigComplex& x) const;
    /// p(x + c).
    PolyC shifted(const BigComplex& c) const;

    friend PolyC operator+(const PolyC& a, const PolyC& b);
    friend PolyC operator-(const PolyC& a, const PolyC& b);
    friend PolyC operator*(const PolyC& a, const BigComplex& c);

private:
    std::vector<BigComplex> coeffs_;
};

/// Jet of u -> 1/Gamma(u - k) at u = 0, valuation 1, known below u^order.
LaurentSeries recip_gamma_jet(int k, int order, const PrecisionPolicy& p);

/// Jet of e^{2 pi i u} - 1, valuation 1, known below u^order.
LaurentSeries expm_two_pi_i_jet(int order, const PrecisionPolicy& p);

/// Regular jet 1/(Gamma(u-k)(e^{2 pi i u} - 1)) known below u^(order-1).
LaurentSeries q_generating_jet(int k, int order, const PrecisionPolicy& p);

/// mQ_k(x), a polynomial of degree m.
PolyC q_poly(int m, int k, const PrecisionPolicy& p);

/// S_{m,k}(x) = sum_{mu=0}^m c^m_{m-mu,k} muQ_k(x).
PolyC s_poly(int m, int k, const PrecisionPolicy& p);

}  // namespace hyperzeta
