#include "hyperzeta/qpoly.hpp"

#include "hyperzeta/combinatorics.hpp"
#include "hyperzeta/constants.hpp"
#include "hyperzeta/errors.hpp"

namespace hyperzeta {

PolyC PolyC::monomial(const BigComplex& c, int degree) {
    std::vector<BigComplex> v(static_cast<std::size_t>(degree) + 1, BigComplex(c.bits()));
    v.back() = c;
    return PolyC(std::move(v));
}

BigComplex PolyC::coeff(int d, int bits) const {
    if (d < 0 || d > degree()) return BigComplex(bits);
    return coeffs_[static_cast<std::size_t>(d)];
}

BigComplex PolyC::operator()(const BigComplex& x) const {
    if (coeffs_.empty()) return BigComplex(x.bits());
    BigComplex acc = coeffs_.back();
    for (int d = degree() - 1; d >= 0; --d) acc = acc * x + coeffs_[static_cast<std::size_t>(d)];
    return acc;
}

PolyC PolyC::shifted(const BigComplex& c) const {
    // Horner on polynomials: q = (...(a_n (x+c) + a_{n-1})(x+c) + ...)
    const int n = degree();
    if (n < 0) return *this;
    std::vector<BigComplex> out(coeffs_.size(), BigComplex(c.bits()));
    for (int d = n; d >= 0; --d) {
        // out <- out * (x + c) + a_d
        for (int j = n; j >= 1; --j) out[j] = out[j - 1] + out[j] * c;
        out[0] = out[0] * c + coeffs_[static_cast<std::size_t>(d)];
    }
    return PolyC(std::move(out));
}

PolyC operator+(const PolyC& a, const PolyC& b) {
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    int bits = kDefaultPrecisionBits;
    if (!a.coeffs_.empty()) bits = a.coeffs_[0].bits();
    if (!b.coeffs_.empty()) bits = std::min(bits, b.coeffs_[0].bits());
    std::vector<BigComplex> out(n, BigComplex(bits));
    for (std::size_t i = 0; i < n; ++i) {
        if (i < a.coeffs_.size()) out[i] += a.coeffs_[i];
        if (i < b.coeffs_.size()) out[i] += b.coeffs_[i];
    }
    return PolyC(std::move(out));
}

PolyC operator-(const PolyC& a, const PolyC& b) {
    std::vector<BigComplex> neg;
    neg.reserve(b.coeffs_.size());
    for (const auto& x : b.coeffs_) neg.push_back(-x);
    return a + PolyC(std::move(neg));
}

PolyC operator*(const PolyC& a, const BigComplex& c) {
    std::vector<BigComplex> out;
    out.reserve(a.coeffs_.size());
    for (const auto& x : a.coeffs_) out.push_back(x * c);
    return PolyC(std::move(out));
}

LaurentSeries recip_gamma_jet(int k, int order, const PrecisionPolicy& p) {
    if (k < 0) throw InvalidParameter("recip_gamma_jet requires k >= 0", "k");
    if (order < 2) throw InvalidParameter("recip_gamma_jet requires order >= 2", "order");
    p.validate();
    const int bits = p.precision_bits;
    const int reg = order - 1;  // order of the regular factor
    // log(1/Gamma(1+u)) = gamma u - sum_{j>=2} (-1)^j zeta(j) u^j / j
    LaurentSeries lg(0, reg, bits);
    if (reg > 1) lg.set_coeff(1, BigComplex(euler_gamma(bits)));
    for (int j = 2; j < reg; ++j) {
        BigReal z = zeta_int(j, bits) / static_cast<long>(j);
        lg.set_coeff(j, BigComplex(j % 2 == 0 ? -z : z));
    }
    LaurentSeries jet = series_exp(lg);
    // 1/Gamma(u-k) = u (u-1)...(u-k) / Gamma(1+u)
    for (int j = 1; j <= k; ++j) {
        LaurentSeries factor(0, reg, bits);
        factor.set_coeff(0, BigComplex(static_cast<long>(-j), bits));
        if (reg > 1) factor.set_coeff(1, BigComplex(1L, bits));
        jet = jet * factor;
    }
    return jet.shifted(1);
}

LaurentSeries expm_two_pi_i_jet(int order, const PrecisionPolicy& p) {
    if (order < 2) throw InvalidParameter("expm_two_pi_i_jet requires order >= 2", "order");
    p.validate();
    const int bits = p.precision_bits;
    const LaurentSeries e = LaurentSeries::exp_linear(BigComplex::two_pi_i(bits), order);
    std::vector<BigComplex> c(e.coeffs().begin() + 1, e.coeffs().end());
    return LaurentSeries(1, std::move(c), bits);
}

LaurentSeries q_generating_jet(int k, int order, const PrecisionPolicy& p) {
    return recip_gamma_jet(k, order, p) / expm_two_pi_i_jet(order, p);
}

PolyC q_poly(int m, int k, const PrecisionPolicy& p) {
    if (m < 0) throw InvalidParameter("q_poly requires m >= 0", "m");
    const int bits = p.precision_bits;
    const LaurentSeries jet = q_generating_jet(k, m + k + 8, p);
    // mQ_k(x) = m! sum_d J_{m-d} x^d / d!
    std::vector<BigComplex> coeffs(static_cast<std::size_t>(m) + 1, BigComplex(bits));
    const BigReal mfact = to_real(factorial(m), bits);
    for (int d = 0; d <= m; ++d) {
        coeffs[d] = jet.coeff(m - d) * (mfact / to_real(factorial(d), bits));
    }
    return PolyC(std::move(coeffs));
}

PolyC s_poly(int m, int k, const PrecisionPolicy& p) {
    if (m < 0) throw InvalidParameter("s_poly requires m >= 0", "m");
    const int bits = p.precision_bits;
    PolyC acc(std::vector<BigComplex>(static_cast<std::size_t>(m) + 1, BigComplex(bits)));
    for (int mu = 0; mu <= m; ++mu) {
        acc = acc + q_poly(mu, k, p) * to_complex(coeff_c(m, m - mu, k), bits);
    }
    return acc;
}

}  // namespace hyperzeta
