#pragma once

// Truncated Laurent series ("jets") with BigComplex coefficients.
//
// A series stores the coefficients of t^valuation ... t^(order-1); everything
// from t^order on is unknown. Storage is dense.

#include <vector>

#include "hyperzeta/bignum.hpp"

namespace hyperzeta {

class LaurentSeries {
public:
    /// Zero series known on [valuation, order).
    LaurentSeries(int valuation, int order, int bits);
    LaurentSeries(int valuation, std::vector<BigComplex> coeffs, int bits);

    static LaurentSeries constant(const BigComplex& c, int order);
    /// c * t^power, known up to `order`.
    static LaurentSeries monomial(const BigComplex& c, int power, int order);
    /// Taylor jet of exp(c t) truncated at `order`.
    static LaurentSeries exp_linear(const BigComplex& c, int order);

    int valuation() const noexcept { return valuation_; }
    int order() const noexcept { return valuation_ + static_cast<int>(coeffs_.size()); }
    int bits() const noexcept { return bits_; }
    const std::vector<BigComplex>& coeffs() const noexcept { return coeffs_; }

    /// Coefficient of t^n. Zero below the valuation; IndexError at or above the order.
    BigComplex coeff(int n) const;
    void set_coeff(int n, const BigComplex& c);

    /// Strips leading coefficients with |c| < 2^(-bits/2) and raises the valuation.
    LaurentSeries normalized() const;
    bool is_zero() const;
    LaurentSeries truncated(int order) const;
    /// Multiplies by t^n.
    LaurentSeries shifted(int n) const;
    /// d/dt.
    LaurentSeries derivative() const;

    LaurentSeries operator-() const;

private:
    int valuation_;
    int bits_;
    std::vector<BigComplex> coeffs_;
};

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
/// Throws DivisionByZeroSeries when b normalizes to zero.
LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator*(const LaurentSeries& a, const BigComplex& c);
LaurentSeries operator*(const BigComplex& c, const LaurentSeries& a);

LaurentSeries series_add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries series_div(const LaurentSeries& a, const LaurentSeries& b);
/// Requires valuation >= 0; a constant term is exponentiated at scalar level.
LaurentSeries series_exp(const LaurentSeries& a);
/// Requires a nonzero constant term at valuation 0; DomainError otherwise.
LaurentSeries series_log(const LaurentSeries& a);

}  // namespace hyperzeta
