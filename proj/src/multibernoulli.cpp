#include "hyperzeta/multibernoulli.hpp"

#include <string>

#include "hyperzeta/errors.hpp"

namespace hyperzeta {

OmegaVector::OmegaVector(std::vector<BigComplex> omegas) : omegas_(std::move(omegas)) {
    for (std::size_t i = 0; i < omegas_.size(); ++i) {
        if (!(omegas_[i].real() > 0.0)) {
            throw InvalidParameter("omega_" + std::to_string(i + 1) + " must have positive real part", "omega");
        }
    }
}

OmegaVector OmegaVector::from_doubles(const std::vector<double>& values, int bits) {
    std::vector<BigComplex> v;
    v.reserve(values.size());
    for (double x : values) v.emplace_back(BigReal(x, bits));
    return OmegaVector(std::move(v));
}

BigComplex OmegaVector::product(int bits) const {
    BigComplex p(1L, bits);
    for (const auto& o : omegas_) p = p * o;
    return p;
}

BigReal OmegaVector::pole_bound(int bits) const {
    BigReal best = BigReal::infinity(bits);
    const BigReal two_pi = ldexp(BigReal::pi(bits), 1);
    for (const auto& o : omegas_) {
        BigReal b = two_pi / abs(o);
        if (b < best) best = b;
    }
    return best;
}

OmegaVector OmegaVector::concat(const OmegaVector& other) const {
    std::vector<BigComplex> v = omegas_;
    v.insert(v.end(), other.omegas_.begin(), other.omegas_.end());
    return OmegaVector(std::move(v));
}

OmegaVector OmegaVector::without(int i) const {
    std::vector<BigComplex> v = omegas_;
    v.erase(v.begin() + i);
    return OmegaVector(std::move(v));
}

LaurentSeries f_omega_series(const OmegaVector& omega, int order, int bits) {
    const int r = omega.r();
    if (order <= -r) throw InvalidParameter("expansion order must exceed -r", "order");
    // each factor is (1/(omega t)) * [omega t / (1 - e^{-omega t})]; the bracket
    // is regular and needs relative order order + r.
    const int rel = order + r;
    LaurentSeries result = LaurentSeries::constant(BigComplex(1L, bits), rel);
    for (const auto& o : omega.omegas()) {
        // (1 - e^{-x})/x = sum_n (-x)^n/(n+1)!, x = omega t
        LaurentSeries g(0, rel, bits);
        BigComplex pw(1L, bits);
        BigReal fact(1L, bits);
        for (int n = 0; n < rel; ++n) {
            fact = fact * static_cast<long>(n + 1);
            g.set_coeff(n, pw / fact);
            pw = pw * (-o);
        }
        LaurentSeries inv = LaurentSeries::constant(BigComplex(1L, bits), rel) / g;
        result = result * (inv * (BigComplex(1L, bits) / o));
    }
    return result.shifted(-r);
}

BernoulliExpansion bernoulli_expansion(const OmegaVector& omega, const BigComplex& w, int order) {
    const int bits = w.bits();
    const int r = omega.r();
    LaurentSeries f = f_omega_series(omega, order, bits);
    LaurentSeries e = LaurentSeries::exp_linear(-w, order + r);
    return {omega, w, (f * e).truncated(order)};
}

BigComplex bernoulli_a(const OmegaVector& omega, int N, const BigComplex& w) {
    if (N < -omega.r()) {
        throw IndexError("a_{r,N} requires N >= -r (N=" + std::to_string(N) + ")", "N");
    }
    return bernoulli_expansion(omega, w, N + 1).a(N);
}

std::vector<Rational> bernoulli_expansion_exact(const std::vector<Rational>& omega, const Rational& w, int order) {
    const int r = static_cast<int>(omega.size());
    if (order <= -r) throw InvalidParameter("expansion order must exceed -r", "order");
    const int rel = order + r;
    RationalSeries acc{std::vector<Rational>(static_cast<std::size_t>(rel))};
    acc.coeffs[0] = 1;
    for (const auto& o : omega) {
        if (o <= 0) throw InvalidParameter("omega must be positive", "omega");
        RationalSeries g{std::vector<Rational>(static_cast<std::size_t>(rel))};
        Rational pw = 1;
        for (int n = 0; n < rel; ++n) {
            g.coeffs[n] = pw / Rational(factorial(n + 1));
            pw *= -o;
        }
        acc = acc * inverse(g);
        for (auto& c : acc.coeffs) c /= o;
    }
    RationalSeries e{std::vector<Rational>(static_cast<std::size_t>(rel))};
    Rational pw = 1;
    for (int n = 0; n < rel; ++n) {
        e.coeffs[n] = pw / Rational(factorial(n));
        pw *= -w;
    }
    return (acc * e).coeffs;
}

}  // namespace hyperzeta
