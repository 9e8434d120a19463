#include "hyperzeta/series.hpp"

#include <string>

#include "hyperzeta/errors.hpp"

namespace hyperzeta {

LaurentSeries::LaurentSeries(int valuation, int order, int bits)
    : valuation_(std::min(valuation, order)), bits_(bits) {
    coeffs_.assign(static_cast<std::size_t>(order - valuation_), BigComplex(bits));
}

LaurentSeries::LaurentSeries(int valuation, std::vector<BigComplex> coeffs, int bits)
    : valuation_(valuation), bits_(bits), coeffs_(std::move(coeffs)) {}

LaurentSeries LaurentSeries::constant(const BigComplex& c, int order) {
    return monomial(c, 0, order);
}

LaurentSeries LaurentSeries::monomial(const BigComplex& c, int power, int order) {
    LaurentSeries s(power, order, c.bits());
    if (power < order) s.coeffs_[0] = c;
    return s;
}

LaurentSeries LaurentSeries::exp_linear(const BigComplex& c, int order) {
    LaurentSeries s(0, order, c.bits());
    if (order <= 0) return s;
    s.coeffs_[0] = BigComplex(1L, c.bits());
    for (int j = 1; j < order; ++j) s.coeffs_[j] = s.coeffs_[j - 1] * c / static_cast<long>(j);
    return s;
}

BigComplex LaurentSeries::coeff(int n) const {
    if (n < valuation_) return BigComplex(bits_);
    if (n >= order()) {
        throw IndexError("coefficient t^" + std::to_string(n) + " is beyond the truncation order " +
                         std::to_string(order()));
    }
    return coeffs_[static_cast<std::size_t>(n - valuation_)];
}

void LaurentSeries::set_coeff(int n, const BigComplex& c) {
    if (n < valuation_ || n >= order()) throw IndexError("set_coeff outside stored range");
    coeffs_[static_cast<std::size_t>(n - valuation_)] = c;
}

LaurentSeries LaurentSeries::normalized() const {
    const long threshold_exp = -bits_ / 2;
    std::size_t skip = 0;
    while (skip < coeffs_.size()) {
        const BigComplex& c = coeffs_[skip];
        // |c| < 2^(-bits/2)  <=>  exponent of |c| <= -bits/2
        if (!c.is_zero() && abs(c).exponent() > threshold_exp) break;
        ++skip;
    }
    std::vector<BigComplex> rest(coeffs_.begin() + static_cast<std::ptrdiff_t>(skip), coeffs_.end());
    return LaurentSeries(valuation_ + static_cast<int>(skip), std::move(rest), bits_);
}

bool LaurentSeries::is_zero() const { return normalized().coeffs_.empty(); }

LaurentSeries LaurentSeries::truncated(int new_order) const {
    if (new_order >= order()) return *this;
    if (new_order <= valuation_) return LaurentSeries(new_order, new_order, bits_);
    std::vector<BigComplex> c(coeffs_.begin(), coeffs_.begin() + (new_order - valuation_));
    return LaurentSeries(valuation_, std::move(c), bits_);
}

LaurentSeries LaurentSeries::shifted(int n) const { return LaurentSeries(valuation_ + n, coeffs_, bits_); }

LaurentSeries LaurentSeries::derivative() const {
    std::vector<BigComplex> c;
    c.reserve(coeffs_.size());
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        c.push_back(coeffs_[j] * static_cast<long>(valuation_ + static_cast<int>(j)));
    }
    return LaurentSeries(valuation_ - 1, std::move(c), bits_);
}

LaurentSeries LaurentSeries::operator-() const {
    std::vector<BigComplex> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(-x);
    return LaurentSeries(valuation_, std::move(c), bits_);
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    const int order = std::min(a.order(), b.order());
    const int val = std::min(a.valuation(), b.valuation());
    LaurentSeries out(val, order, std::min(a.bits(), b.bits()));
    for (int n = out.valuation(); n < order; ++n) out.set_coeff(n, a.coeff(n) + b.coeff(n));
    return out;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    const int val = a.valuation() + b.valuation();
    const int order = std::min(a.valuation() + b.order(), b.valuation() + a.order());
    LaurentSeries out(val, order, std::min(a.bits(), b.bits()));
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    const int len = order - out.valuation();
    std::vector<BigComplex> c(static_cast<std::size_t>(std::max(len, 0)), BigComplex(out.bits()));
    for (int i = 0; i < len && i < static_cast<int>(ac.size()); ++i) {
        if (ac[i].is_zero()) continue;
        for (int j = 0; i + j < len && j < static_cast<int>(bc.size()); ++j) c[i + j] += ac[i] * bc[j];
    }
    return LaurentSeries(out.valuation(), std::move(c), out.bits());
}

LaurentSeries operator*(const LaurentSeries& a, const BigComplex& s) {
    std::vector<BigComplex> c;
    c.reserve(a.coeffs().size());
    for (const auto& x : a.coeffs()) c.push_back(x * s);
    return LaurentSeries(a.valuation(), std::move(c), std::min(a.bits(), s.bits()));
}

LaurentSeries operator*(const BigComplex& s, const LaurentSeries& a) { return a * s; }

LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b_raw) {
    const LaurentSeries b = b_raw.normalized();
    if (b.coeffs().empty()) throw DivisionByZeroSeries("division by a series that normalizes to zero");
    const int vb = b.valuation();
    const int rel = b.order() - vb;  // relative precision of b
    // 1/b = t^-vb * (d_0 + d_1 t + ...), relative order rel
    const auto& bc = b.coeffs();
    std::vector<BigComplex> d(static_cast<std::size_t>(rel), BigComplex(b.bits()));
    const BigComplex inv0 = BigComplex(1L, b.bits()) / bc[0];
    d[0] = inv0;
    for (int i = 1; i < rel; ++i) {
        BigComplex acc(b.bits());
        for (int j = 1; j <= i; ++j) acc += bc[j] * d[i - j];
        d[i] = -acc * inv0;
    }
    LaurentSeries recip(-vb, std::move(d), b.bits());
    return a * recip;
}

LaurentSeries series_add(const LaurentSeries& a, const LaurentSeries& b) { return a + b; }
LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b) { return a * b; }
LaurentSeries series_div(const LaurentSeries& a, const LaurentSeries& b) { return a / b; }

LaurentSeries series_exp(const LaurentSeries& a) {
    const int order = a.order();
    if (a.valuation() < 0) {
        // only acceptable if the negative-power coefficients are all zero
        const LaurentSeries n = a.normalized();
        if (n.valuation() < 0) throw DomainError("exp of a series with a pole");
        return series_exp(LaurentSeries(0, order, a.bits()) + n);
    }
    const int bits = a.bits();
    LaurentSeries out(0, order, bits);
    if (order <= 0) return out;
    const BigComplex c0 = a.coeff(0);
    // e = exp(rest), e' = rest' e  =>  n e_n = sum_{j=1}^n j r_j e_{n-j}
    std::vector<BigComplex> e(static_cast<std::size_t>(order), BigComplex(bits));
    e[0] = BigComplex(1L, bits);
    for (int n = 1; n < order; ++n) {
        BigComplex acc(bits);
        for (int j = 1; j <= n; ++j) {
            const BigComplex rj = a.coeff(j);
            if (!rj.is_zero()) acc += rj * e[n - j] * static_cast<long>(j);
        }
        e[n] = acc / static_cast<long>(n);
    }
    if (!c0.is_zero()) {
        const BigComplex scale = exp(c0);
        for (auto& x : e) x = x * scale;
    }
    return LaurentSeries(0, std::move(e), bits);
}

LaurentSeries series_log(const LaurentSeries& a) {
    const LaurentSeries n = a.normalized();
    if (n.coeffs().empty() || n.valuation() != 0) {
        throw DomainError("log requires a nonzero constant term");
    }
    const int order = a.order();
    const int bits = a.bits();
    const BigComplex c0 = n.coeff(0);
    // l = log(a/c0), l' = a'/a  =>  n l_n c0 = n a_n - sum_{j=1}^{n-1} j l_j a_{n-j}
    std::vector<BigComplex> l(static_cast<std::size_t>(order), BigComplex(bits));
    l[0] = log(c0);
    for (int k = 1; k < order; ++k) {
        BigComplex acc = n.coeff(k) * static_cast<long>(k);
        for (int j = 1; j < k; ++j) acc -= l[j] * n.coeff(k - j) * static_cast<long>(j);
        l[k] = acc / (c0 * static_cast<long>(k));
    }
    return LaurentSeries(0, std::move(l), bits);
}

}  // namespace hyperzeta
