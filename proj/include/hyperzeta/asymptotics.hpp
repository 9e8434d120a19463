#pragma once

// Numerical harness for the large-w expansion
//   mP_{r+l,k}(w + a; (omega, alpha))
//     = sum_{N=-l}^{r+k} a_{l,N}(a; alpha) mP_{r,k-N}(w; omega) + O((log w)^{m-1} / w)
// and for the contour-to-ray reduction of its remainder term.

#include <vector>

#include "hyperzeta/evaluators.hpp"

namespace hyperzeta {

struct AsymExperiment {
    OmegaVector omega;  // retained periods, length r
    OmegaVector alpha;  // absorbed periods, length l
    BigComplex a;
    int m = 1;
    int k = 0;
    std::vector<double> w_grid{10, 20, 40, 80, 160};
    /// Evaluate the left side at w instead of w + a.
    bool strict_statement = false;

    /// r=1, l=1, k=0, m=1, omega=(1), alpha=(1), a=1/2.
    static AsymExperiment default_experiment(int bits);
    /// Throws InvalidParameter. Re(a) > 0 is required unless l = 0, where a = 0 is allowed.
    void validate() const;
};

struct AsymRow {
    double w = 0;
    BigComplex lhs;
    BigComplex rhs_sum;
    BigComplex error;         // lhs - rhs_sum
    double normalized_error;  // |error| w / (1 + |log w|^{m-1})
    double err_estimate;      // quadrature error carried by lhs and rhs
};

EvalResult rhs_expansion(const AsymExperiment& e, const BigReal& w, const PrecisionPolicy& p);
EvalResult lhs_value(const AsymExperiment& e, const BigReal& w, const PrecisionPolicy& p);

/// One row per grid point, ordered by w.
std::vector<AsymRow> run_experiment(const AsymExperiment& e, const PrecisionPolicy& p);

struct FitResult {
    BigComplex fitted;     // extrapolated limit of error * w
    BigComplex reference;  // a_{l,r+k+1}(a; alpha) / (omega_1 ... omega_r)
    BigComplex first_order;  // linear extrapolant from the top two points
    double relative_discrepancy;  // |fitted - first_order| / max(|fitted|, |reference|)
    double relative_error;        // |fitted - reference| / |reference|
};

/// Richardson extrapolation (in 1/w) of error * w over the three largest grid
/// points. Requires m = 1. Throws FitUnstable if the quadratic and linear
/// extrapolants disagree by more than 5%.
FitResult fit_one_over_w(const AsymExperiment& e, const std::vector<AsymRow>& rows, const PrecisionPolicy& p);
FitResult fit_one_over_w(const AsymExperiment& e, const PrecisionPolicy& p);

struct ReductionCheck {
    BigComplex contour;  // Hankel integral of f_omega e^{-wt} R(t) t^{-k-1} (log t)^nu
    BigComplex rays;     // sum_D C(nu,D) (2 pi i)^{nu-D} * real-axis integral with (log t)^D
    double err_estimate;
};

/// R(t) = sum_{N=r+k+1}^{remainder_order-1} a_{l,N}(a; alpha) t^N; remainder_order
/// defaults to r + k + 25.
ReductionCheck remainder_reduction_check(const AsymExperiment& e, const BigReal& w, int nu,
                                         const PrecisionPolicy& p, int remainder_order = -1);

}  // namespace hyperzeta
