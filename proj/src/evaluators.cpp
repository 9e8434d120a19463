#include "hyperzeta/evaluators.hpp"

#include <cmath>
#include <span>

#include "hyperzeta/combinatorics.hpp"
#include "hyperzeta/constants.hpp"
#include "hyperzeta/errors.hpp"
#include "hyperzeta/qpoly.hpp"

namespace hyperzeta {

std::string to_string(Method m) {
    switch (m) {
        case Method::direct_sum: return "direct_sum";
        case Method::contour: return "contour";
        case Method::closed_form: return "closed_form";
        case Method::combination: return "combination";
    }
    return "unknown";
}

namespace {

void require_positive_real_part(const BigComplex& w) {
    if (!(w.real() > 0.0)) throw InvalidParameter("Re(w) must be positive", "w");
}

struct LatticeSummer {
    int bits;
    long cutoff;  // N
    int max_terms;
    BigReal tol;
    double err = 0;

    // zeta over the lattice spanned by omegas, Re(s) > omegas.size()
    BigComplex sum(const BigComplex& s, const BigComplex& w, std::span<const BigComplex> omegas) {
        if (omegas.empty()) return pow(w, -s);
        const BigComplex& om = omegas.back();
        const auto rest = omegas.first(omegas.size() - 1);
        BigComplex acc(bits);
        BigComplex shift = w;
        for (long n = 0; n < cutoff; ++n) {
            acc += sum(s, shift, rest);
            shift += om;
        }
        // Euler-Maclaurin tail for g(x) = zeta_{r-1}(s, w + x om), x >= N
        const BigComplex& W = shift;
        const BigComplex s_minus_1 = s - 1L;
        acc += sum(s_minus_1, W, rest) / (s_minus_1 * om);
        acc += sum(s, W, rest) / 2L;
        // g^{(q)}(N) = om^q (-1)^q (s)_q zeta_{r-1}(s+q, W)
        BigComplex rising = s;   // (s)_1
        BigComplex om_pow = om;  // om^1
        BigReal prev(bits);
        for (int j = 1; j <= max_terms; ++j) {
            const int q = 2 * j - 1;
            const BigReal coef = to_real(bernoulli_number(2 * j), bits) / to_real(factorial(2 * j), bits);
            BigComplex term = (rising * om_pow) * sum(s + static_cast<long>(q), W, rest) * coef;
            // - B_{2j}/(2j)! g^{(q)}(N), with (-1)^q = -1
            acc += term;
            const BigReal mag = abs(term);
            if (mag < tol) {
                err += mag.to_double();
                return acc;
            }
            if (j > 3 && mag > prev) break;
            prev = mag;
            rising = rising * (s + static_cast<long>(q)) * (s + static_cast<long>(q + 1));
            om_pow = om_pow * om * om;
        }
        throw ConvergenceTooSlow("Euler-Maclaurin correction did not converge; raise Re(s) or the cutoff");
    }
};

BigComplex integer_power(const BigComplex& z, int n) { return pow(z, static_cast<long>(n)); }

}  // namespace

EvalResult zeta_direct(const ZetaParams& zp, double tol, const PrecisionPolicy& p) {
    p.validate();
    require_positive_real_part(zp.w);
    const int r = zp.omega.r();
    if (!(zp.s.real() > r + 0.25)) {
        throw ConvergenceTooSlow("direct summation needs Re(s) > r + 0.25", "s");
    }
    if (!(tol > 0)) throw InvalidParameter("tol must be positive", "tol");
    const int bits = p.precision_bits;
    if (r == 0) return {pow(zp.w, -zp.s), 0.0, Method::direct_sum};
    const double mod_s = abs(zp.s).to_double();
    LatticeSummer summer{bits, static_cast<long>(std::ceil(mod_s)) + 12 + bits / 12, 60,
                         BigReal(tol * 1e-3, bits)};
    const BigComplex value = summer.sum(zp.s, zp.w, zp.omega.omegas());
    const double roundoff = abs(value).to_double() * std::ldexp(1.0, -(bits - 16));
    return {value, summer.err + roundoff, Method::direct_sum};
}

EvalResult zeta_contour(const ZetaParams& zp, const PrecisionPolicy& p, const std::optional<HankelSpec>& spec) {
    p.validate();
    require_positive_real_part(zp.w);
    const int bits = p.precision_bits;
    const BigReal nearest = floor(zp.s.real() + BigReal(0.5, bits));
    const double dist = abs(zp.s - BigComplex(nearest)).to_double();
    if (dist < 1e-3) {
        throw TooCloseToInteger("s is within 1e-3 of an integer; use the log_hyper_gamma evaluators", "s");
    }
    const HankelSpec hs = spec ? *spec : auto_spec(zp.omega, zp.w, p);
    const QuadResult q = hankel_integrate({zp.omega, zp.w, ComplexPower{zp.s}, std::nullopt}, hs);
    const BigComplex prefactor =
        BigComplex(1L, bits) / (gamma_oracle(zp.s, p) * expm1(BigComplex::two_pi_i(bits) * zp.s));
    return {q.value * prefactor, q.err_estimate * abs(prefactor).to_double(), Method::contour};
}

EvalResult zeta(const ZetaParams& zp, const PrecisionPolicy& p, const std::optional<HankelSpec>& spec) {
    p.validate();
    require_positive_real_part(zp.w);
    const BigReal nearest = floor(zp.s.real() + BigReal(0.5, p.precision_bits));
    if (abs(zp.s - BigComplex(nearest)).to_double() >= 1e-3) return zeta_contour(zp, p, spec);
    if (zp.omega.r() == 0) return {pow(zp.w, -zp.s), 0.0, Method::closed_form};
    if (zp.s.real() > zp.omega.r() + 0.25) return zeta_direct(zp, p.target_abs_error, p);
    throw TooCloseToInteger("s is within 1e-3 of an integer <= r; no supported method", "s");
}

EvalResult log_hyper_gamma(const GammaParams& gp, const PrecisionPolicy& p, const std::optional<HankelSpec>& spec) {
    p.validate();
    require_positive_real_part(gp.w);
    if (gp.m < 0 || gp.k < 0) throw InvalidParameter("log_hyper_gamma requires m, k >= 0", gp.m < 0 ? "m" : "k");
    const HankelSpec hs = spec ? *spec : auto_spec(gp.omega, gp.w, p);
    const QuadResult q =
        hankel_integrate({gp.omega, gp.w, LogPolyPower{gp.k, q_poly(gp.m, gp.k, p)}, std::nullopt}, hs);
    return {q.value, q.err_estimate, Method::contour};
}

EvalResult balanced_P(const GammaParams& gp, const PrecisionPolicy& p, const std::optional<HankelSpec>& spec) {
    p.validate();
    require_positive_real_part(gp.w);
    if (gp.m < 0) throw InvalidParameter("balanced_P requires m >= 0", "m");
    const HankelSpec hs = spec ? *spec : auto_spec(gp.omega, gp.w, p);
    const PolyC poly = s_poly(gp.m, std::max(gp.k, 0), p);
    const QuadResult q = hankel_integrate({gp.omega, gp.w, LogPolyPower{gp.k, poly}, std::nullopt}, hs);
    return {q.value, q.err_estimate, Method::contour};
}

EvalResult balanced_P_combination(const GammaParams& gp, const PrecisionPolicy& p) {
    p.validate();
    if (gp.k < 0) throw InvalidParameter("the combination path is defined for k >= 0 only", "k");
    const int bits = p.precision_bits;
    BigComplex acc(bits);
    double err = 0;
    const HankelSpec hs = auto_spec(gp.omega, gp.w, p);
    for (int mu = 0; mu <= gp.m; ++mu) {
        const Rational c = coeff_c(gp.m, gp.m - mu, gp.k);
        if (c == 0) continue;
        const EvalResult lg = log_hyper_gamma({mu, gp.k, gp.w, gp.omega}, p, hs);
        const BigReal cr = to_real(c, bits);
        acc += lg.value * cr;
        err += lg.err_estimate * std::abs(cr.to_double());
    }
    return {acc, err, Method::combination};
}

BigComplex p0_closed_form(int m, int k, const BigComplex& w) {
    if (m < 0) throw InvalidParameter("m must be non-negative", "m");
    require_positive_real_part(w);
    const int bits = w.bits();
    const BigComplex neg_log = -log(w);
    BigComplex acc(bits);
    if (k >= 0) {
        // sum_mu c^m_{m-mu,k} (-log w)^mu w^k
        for (int mu = 0; mu <= m; ++mu) {
            acc += integer_power(neg_log, mu) * to_real(coeff_c(m, m - mu, k), bits);
        }
        return acc * integer_power(w, k);
    }
    // k = -j: d^m/ds^m at 0 of (s)_j w^{-j-s}
    const int j = -k;
    for (int i = 0; i <= std::min(m, j); ++i) {
        const BigInt c = binomial(m, i) * factorial(i) * stirling1_unsigned(j, i);
        if (c == 0) continue;
        acc += integer_power(neg_log, m - i) * to_real(c, bits);
    }
    return acc * integer_power(w, k);
}

BigComplex hurwitz_oracle(const BigComplex& s, const BigComplex& w, const PrecisionPolicy& p) {
    p.validate();
    require_positive_real_part(w);
    if ((s - 1L).is_zero()) throw DomainError("Hurwitz zeta has a pole at s = 1", "s");
    const long N = static_cast<long>(std::ceil(abs(s).to_double())) + 20 + p.precision_bits / 8;
    // the partial sum grows like N^{1-s} when Re s < 1; carry enough bits to absorb the cancellation
    const double growth = std::max(0.0, 1.0 - s.real().to_double()) * std::log2(N + abs(w).to_double() + 1.0);
    const int bits = p.precision_bits + 32 + static_cast<int>(std::ceil(growth));
    const BigComplex sw = s.with_bits(bits);
    const BigComplex s_minus_1 = sw - 1L;
    BigComplex acc(bits);
    BigComplex x = w.with_bits(bits);
    for (long n = 0; n < N; ++n) {
        acc += pow(x, -sw);
        x = x + 1L;
    }
    acc += pow(x, -s_minus_1) / s_minus_1;
    const BigComplex x_pow = pow(x, -sw);
    acc += x_pow / 2L;
    const BigComplex inv_x2 = BigComplex(1L, bits) / (x * x);
    BigComplex rising = sw;
    BigComplex xp = x_pow / x;  // x^{-s-1}
    const BigReal target = abs(acc) * std::ldexp(1.0, -bits - 4);
    BigReal prev(bits);
    for (int j = 1; j < 400; ++j) {
        const BigReal coef = to_real(bernoulli_number(2 * j), bits) / to_real(factorial(2 * j), bits);
        BigComplex term = rising * xp * coef;
        acc += term;
        const BigReal mag = abs(term);
        if (mag <= target || mag.is_zero()) return acc.with_bits(p.precision_bits);
        if (j > 3 && mag > prev) break;
        prev = mag;
        rising = rising * (sw + static_cast<long>(2 * j - 1)) * (sw + static_cast<long>(2 * j));
        xp = xp * inv_x2;
    }
    throw PrecisionUnreachable("Hurwitz Euler-Maclaurin series did not reach working precision");
}

namespace {

BigComplex stirling_loggamma(const BigComplex& z, int bits) {
    // (z - 1/2) log z - z + log(2 pi)/2 + sum_j B_2j / (2j (2j-1) z^{2j-1})
    const BigReal half_log_2pi = ldexp(log(ldexp(BigReal::pi(bits), 1)), -1);
    BigComplex acc = (z - BigComplex(BigReal(0.5, bits))) * log(z) - z + half_log_2pi;
    const BigComplex inv_z2 = BigComplex(1L, bits) / (z * z);
    BigComplex zp = BigComplex(1L, bits) / z;
    const BigReal target = ldexp(BigReal(1L, bits), -bits - 4) * (abs(acc) + 1L);
    for (int j = 1; j < 400; ++j) {
        BigComplex term = zp * (to_real(bernoulli_number(2 * j), bits) / static_cast<long>(2 * j * (2 * j - 1)));
        acc += term;
        if (abs(term) < target) return acc;
        zp = zp * inv_z2;
    }
    throw PrecisionUnreachable("Stirling series did not converge");
}

long stirling_shift(const BigComplex& z, int bits) {
    const double threshold = 0.12 * bits + 10;
    const double re = z.real().to_double();
    return re >= threshold ? 0 : static_cast<long>(std::ceil(threshold - re));
}

}  // namespace

BigComplex loggamma_oracle(const BigComplex& w, const PrecisionPolicy& p) {
    p.validate();
    require_positive_real_part(w);
    const int bits = p.precision_bits;
    const long n = stirling_shift(w, bits);
    BigComplex acc = stirling_loggamma(w + n, bits);
    for (long j = 0; j < n; ++j) acc -= log(w + j);
    return acc;
}

BigComplex gamma_oracle(const BigComplex& s, const PrecisionPolicy& p) {
    p.validate();
    const int bits = p.precision_bits;
    if (s.imag().is_zero() && s.real() <= 0.0 && floor(s.real()) == s.real()) {
        throw DomainError("Gamma has a pole at non-positive integers", "s");
    }
    const long n = stirling_shift(s, bits);
    BigComplex denom(1L, bits);
    for (long j = 0; j < n; ++j) denom = denom * (s + j);
    return exp(stirling_loggamma(s + n, bits)) / denom;
}

BigComplex bernoulli_poly_oracle(int n, const BigComplex& w) {
    if (n < 0) throw InvalidParameter("n must be non-negative", "n");
    const int bits = w.bits();
    BigComplex acc(bits);
    for (int j = 0; j <= n; ++j) {
        acc += integer_power(w, n - j) * to_real(Rational(binomial(n, j)) * bernoulli_number(j), bits);
    }
    return acc;
}

BigComplex central_derivative(const std::function<BigComplex(const BigComplex&)>& f, const BigComplex& w,
                              const BigReal& h) {
    const BigComplex f1p = f(w + h), f1m = f(w - h);
    const BigComplex f2p = f(w + h * 2L), f2m = f(w - h * 2L);
    const BigComplex f4p = f(w + h * 4L), f4m = f(w - h * 4L);
    // 5-point stencil at step h and 2h
    const BigComplex d_h = (f2m - f2p + (f1p - f1m) * 8L) / (h * 12L);
    const BigComplex d_2h = (f4m - f4p + (f2p - f2m) * 8L) / (h * 24L);
    return (d_h * 16L - d_2h) / 15L;
}

}  // namespace hyperzeta
