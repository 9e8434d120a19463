#pragma once

// Public evaluation API for the Barnes zeta function zeta_r(s, w; omega),
// log mGamma_{r,k}(w; omega) and the balanced functions mP_{r,k}(w; omega),
// plus the classical reference functions used to cross-check them.

#include <functional>
#include <optional>
#include <string>

#include "hyperzeta/bignum.hpp"
#include "hyperzeta/hankel.hpp"
#include "hyperzeta/multibernoulli.hpp"

namespace hyperzeta {

enum class Method { direct_sum, contour, closed_form, combination };
std::string to_string(Method m);

struct EvalResult {
    BigComplex value;
    double err_estimate = 0;
    Method method = Method::contour;
};

struct ZetaParams {
    BigComplex s;
    BigComplex w;
    OmegaVector omega;
};

struct GammaParams {
    int m = 0;
    int k = 0;
    BigComplex w;
    OmegaVector omega;
};

/// Lattice sum over n >= 0 of (n.omega + w)^{-s}. The innermost r-1 sums are
/// nested and the outermost tail of every level is closed with an
/// Euler-Maclaurin correction. Requires Re(s) > r + 0.25 (ConvergenceTooSlow
/// otherwise, or when the correction series stops decreasing above `tol`).
EvalResult zeta_direct(const ZetaParams& zp, double tol, const PrecisionPolicy& p);

/// zeta_r via the Hankel representation with prefactor 1/(Gamma(s)(e^{2 pi i s} - 1)).
/// Throws TooCloseToInteger when dist(s, Z) < 1e-3.
EvalResult zeta_contour(const ZetaParams& zp, const PrecisionPolicy& p,
                        const std::optional<HankelSpec>& spec = std::nullopt);

/// Contour away from integers; near an integer s the direct sum (Re s > r + 0.25)
/// or the r = 0 closed form. TooCloseToInteger otherwise.
EvalResult zeta(const ZetaParams& zp, const PrecisionPolicy& p, const std::optional<HankelSpec>& spec = std::nullopt);

/// log mGamma_{r,k}(w; omega) by contour integration against mQ_k(log t).
EvalResult log_hyper_gamma(const GammaParams& gp, const PrecisionPolicy& p,
                           const std::optional<HankelSpec>& spec = std::nullopt);

/// mP_{r,k}(w; omega) by a single contour integral against S_{m,k}(log t).
/// Any integer k is accepted; for k < 0 the integrand is t^{-k-1} S_{m,0}(log t).
EvalResult balanced_P(const GammaParams& gp, const PrecisionPolicy& p,
                      const std::optional<HankelSpec>& spec = std::nullopt);

/// mP_{r,k} as sum_mu c^m_{m-mu,k} log muGamma_{r,k}; k >= 0 only.
EvalResult balanced_P_combination(const GammaParams& gp, const PrecisionPolicy& p);

/// mP_{0,k}(w): the r = 0 case where zeta_0(s, w) = w^{-s}. Defined for every integer k.
BigComplex p0_closed_form(int m, int k, const BigComplex& w);

/// Hurwitz zeta by Euler-Maclaurin, any complex s != 1, Re(w) > 0.
BigComplex hurwitz_oracle(const BigComplex& s, const BigComplex& w, const PrecisionPolicy& p);
/// Principal log Gamma for Re(w) > 0 by upward shift and Stirling's series.
BigComplex loggamma_oracle(const BigComplex& w, const PrecisionPolicy& p);
/// Gamma(s) for s not a non-positive integer.
BigComplex gamma_oracle(const BigComplex& s, const PrecisionPolicy& p);
/// Bernoulli polynomial B_n(w) from exact Bernoulli numbers.
BigComplex bernoulli_poly_oracle(int n, const BigComplex& w);

/// d/dw f at w: 5-point central stencil at steps h and 2h, Richardson-combined.
BigComplex central_derivative(const std::function<BigComplex(const BigComplex&)>& f, const BigComplex& w,
                              const BigReal& h);

}  // namespace hyperzeta
