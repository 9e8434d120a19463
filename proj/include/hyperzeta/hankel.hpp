#pragma once

// Quadrature over the Hankel path I(lambda, inf): the ray from +inf down to
// lambda with arg t = 0, the circle |t| = lambda traversed counter-clockwise
// from arg 0 to arg 2 pi, and the ray back out to +inf with arg t = 2 pi.
//
// The two rays are merged into a single integral over [lambda, T] of the
// jump of the integrand across the cut, so single-valued integrands see the
// rays cancel exactly.

#include <optional>
#include <variant>
#include <vector>

#include "hyperzeta/bignum.hpp"
#include "hyperzeta/multibernoulli.hpp"
#include "hyperzeta/qpoly.hpp"

namespace hyperzeta {

struct HankelSpec {
    BigReal lambda;
    BigReal ray_truncation;   // T
    int gl_order = 32;        // Gauss-Legendre nodes per panel
    BigReal max_panel_width;  // cap on ray panel width
    int circle_panels = 8;    // power of two
    int refinement = 0;       // level L: every panel split into 2^L
    int max_refinements = 5;
    double target_abs_error = 1e-32;
    double target_rel_error = 1e-32;

    int ray_nodes() const;
    int circle_nodes() const { return circle_panels * (1 << refinement) * gl_order; }
    /// Throws InvalidParameter unless 0 < lambda < 0.9 pole_bound(omega) and T > lambda.
    void validate(const OmegaVector& omega) const;
};

/// t^{-k-1} poly(log t); k may be negative.
struct LogPolyPower {
    int k = 0;
    PolyC poly;
};

/// t^{s-1}.
struct ComplexPower {
    BigComplex s;
};

struct IntegrandSpec {
    OmegaVector omega;
    BigComplex w;
    std::variant<LogPolyPower, ComplexPower> power;
    /// Optional extra factor R(t), a polynomial in t.
    std::optional<PolyC> t_factor;
};

struct QuadResult {
    BigComplex value;
    double err_estimate = 0;
    BigComplex circle_part;
    BigComplex ray_part;
    HankelSpec spec;  // spec actually used (refined level, tightened T)
};

/// lambda = 0.5 min(pole_bound, 2 pi), shrunk to 8/|w| for large |w| so the
/// circle does not see e^{|w| lambda} cancellation; T = max(30/Re w, 4 lambda).
/// Throws InvalidParameter if Re(w) <= 0.
HankelSpec auto_spec(const OmegaVector& omega, const BigComplex& w, const PrecisionPolicy& p);

/// Integral of f_omega(t) e^{-wt} R(t) * power(t) over I(lambda, inf).
/// Refines until consecutive levels agree within the spec's targets.
/// Throws NodeBudgetExceeded or PolesTooClose.
QuadResult hankel_integrate(const IntegrandSpec& ispec, const HankelSpec& hspec);

/// Real-axis integral over (0, inf) of f_omega e^{-wt} R(t) t^{-k-1} (log t)^D.
/// `ispec.power` must be a LogPolyPower; its polynomial is ignored in favour of (log t)^D.
QuadResult ray_only_integrate(const IntegrandSpec& ispec, int D, const HankelSpec& hspec);

/// Gauss-Legendre nodes and weights on [-1, 1], cached per (order, bits).
struct GaussLegendreRule {
    std::vector<BigReal> nodes;
    std::vector<BigReal> weights;
};
const GaussLegendreRule& gauss_legendre(int order, int bits);

/// Fixed-order pairwise summation.
BigComplex pairwise_sum(const std::vector<BigComplex>& terms, int bits);

}  // namespace hyperzeta
