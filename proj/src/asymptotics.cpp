#include "hyperzeta/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hyperzeta/combinatorics.hpp"
#include "hyperzeta/errors.hpp"

namespace hyperzeta {

AsymExperiment AsymExperiment::default_experiment(int bits) {
    AsymExperiment e;
    e.omega = OmegaVector::from_doubles({1.0}, bits);
    e.alpha = OmegaVector::from_doubles({1.0}, bits);
    e.a = BigComplex(0.5, 0.0, bits);
    return e;
}

void AsymExperiment::validate() const {
    if (m < 0 || k < 0) throw InvalidParameter("m and k must be non-negative", m < 0 ? "m" : "k");
    if (alpha.r() > 0 ? !(a.real() > 0.0) : !(a.real() >= 0.0)) {
        throw InvalidParameter("Re(a) must be positive", "a");
    }
    if (w_grid.size() < 4) throw InvalidParameter("w grid needs at least 4 points", "w_grid");
    for (std::size_t i = 0; i < w_grid.size(); ++i) {
        if (!(w_grid[i] > 0)) throw InvalidParameter("w grid values must be positive", "w_grid");
        if (i > 0 && !(w_grid[i] > w_grid[i - 1])) {
            throw InvalidParameter("w grid must be strictly increasing", "w_grid");
        }
    }
}

EvalResult rhs_expansion(const AsymExperiment& e, const BigReal& w, const PrecisionPolicy& p) {
    const int bits = p.precision_bits;
    const int r = e.omega.r();
    const int l = e.alpha.r();
    const BernoulliExpansion ex = bernoulli_expansion(e.alpha, e.a.with_bits(bits), r + e.k + 1);
    const BigComplex wc(w.with_bits(bits));
    BigComplex acc(bits);
    double err = 0;
    for (int N = -l; N <= r + e.k; ++N) {
        const BigComplex coef = ex.a(N);
        if (coef.is_zero()) continue;
        const EvalResult pk = balanced_P({e.m, e.k - N, wc, e.omega}, p);
        acc += coef * pk.value;
        err += abs(coef).to_double() * pk.err_estimate;
    }
    return {acc, err, Method::combination};
}

EvalResult lhs_value(const AsymExperiment& e, const BigReal& w, const PrecisionPolicy& p) {
    const int bits = p.precision_bits;
    BigComplex arg(w.with_bits(bits));
    if (!e.strict_statement) arg += e.a.with_bits(bits);
    return balanced_P({e.m, e.k, arg, e.omega.concat(e.alpha)}, p);
}

std::vector<AsymRow> run_experiment(const AsymExperiment& e, const PrecisionPolicy& p) {
    e.validate();
    const int bits = p.precision_bits;
    std::vector<AsymRow> rows;
    rows.reserve(e.w_grid.size());
    for (double wv : e.w_grid) {
        const BigReal w(wv, bits);
        const EvalResult lhs = lhs_value(e, w, p);
        const EvalResult rhs = rhs_expansion(e, w, p);
        AsymRow row;
        row.w = wv;
        row.lhs = lhs.value;
        row.rhs_sum = rhs.value;
        row.error = lhs.value - rhs.value;
        const double lw = std::abs(std::log(wv));
        row.normalized_error = abs(row.error).to_double() * wv / (1.0 + std::pow(lw, e.m - 1));
        row.err_estimate = lhs.err_estimate + rhs.err_estimate;
        rows.push_back(std::move(row));
    }
    return rows;
}

FitResult fit_one_over_w(const AsymExperiment& e, const std::vector<AsymRow>& rows, const PrecisionPolicy& p) {
    if (e.m != 1) throw InvalidParameter("the 1/w coefficient fit applies to m = 1", "m");
    if (rows.size() < 3) throw InvalidParameter("fit needs at least three rows", "w_grid");
    const int bits = p.precision_bits;
    // Neville extrapolation to x = 1/w -> 0 of y = error * w through the top three points
    const std::size_t n = rows.size();
    std::vector<BigReal> x;
    std::vector<BigComplex> y;
    for (std::size_t i = n - 3; i < n; ++i) {
        const BigReal w(rows[i].w, bits);
        x.push_back(1L / w);
        y.push_back(rows[i].error * w);
    }
    // linear through the two largest w
    const BigComplex p12 = (y[2] * x[1] - y[1] * x[2]) / (x[1] - x[2]);
    const BigComplex p01 = (y[1] * x[0] - y[0] * x[1]) / (x[0] - x[1]);
    const BigComplex p012 = (p12 * x[0] - p01 * x[2]) / (x[0] - x[2]);

    FitResult fit;
    fit.fitted = p012;
    fit.first_order = p12;
    fit.reference = bernoulli_a(e.alpha, e.omega.r() + e.k + 1, e.a.with_bits(bits)) / e.omega.product(bits);
    const double scale = std::max(abs(fit.fitted).to_double(), abs(fit.reference).to_double());
    fit.relative_discrepancy = scale > 0 ? abs(fit.fitted - fit.first_order).to_double() / scale : 0.0;
    const double ref = abs(fit.reference).to_double();
    fit.relative_error = ref > 0 ? abs(fit.fitted - fit.reference).to_double() / ref
                                 : std::numeric_limits<double>::infinity();
    if (fit.relative_discrepancy > 0.05) {
        throw FitUnstable("successive Richardson extrapolants of error*w disagree by " +
                          std::to_string(100 * fit.relative_discrepancy) + "%");
    }
    return fit;
}

FitResult fit_one_over_w(const AsymExperiment& e, const PrecisionPolicy& p) {
    return fit_one_over_w(e, run_experiment(e, p), p);
}

ReductionCheck remainder_reduction_check(const AsymExperiment& e, const BigReal& w, int nu, const PrecisionPolicy& p,
                                         int remainder_order) {
    if (nu < 0) throw InvalidParameter("nu must be non-negative", "nu");
    const int bits = p.precision_bits;
    const int r = e.omega.r();
    const int lo = r + e.k + 1;
    if (remainder_order < 0) remainder_order = r + e.k + 25;
    if (remainder_order <= lo) throw InvalidParameter("remainder order too small", "remainder_order");

    const BernoulliExpansion ex = bernoulli_expansion(e.alpha, e.a.with_bits(bits), remainder_order);
    std::vector<BigComplex> rc(static_cast<std::size_t>(remainder_order), BigComplex(bits));
    for (int N = lo; N < remainder_order; ++N) rc[N] = ex.a(N);
    const PolyC R(std::move(rc));

    const BigComplex wc(w.with_bits(bits));
    const HankelSpec hs = auto_spec(e.omega, wc, p);
    const QuadResult contour = hankel_integrate(
        {e.omega, wc, LogPolyPower{e.k, PolyC::monomial(BigComplex(1L, bits), nu)}, R}, hs);

    const BigComplex two_pi_i = BigComplex::two_pi_i(bits);
    BigComplex rays(bits);
    double err = contour.err_estimate;
    for (int D = 0; D < nu; ++D) {
        const QuadResult ray = ray_only_integrate({e.omega, wc, LogPolyPower{e.k, PolyC{}}, R}, D, hs);
        const BigComplex weight = pow(two_pi_i, static_cast<long>(nu - D)) * to_real(binomial(nu, D), bits);
        rays += weight * ray.value;
        err += abs(weight).to_double() * ray.err_estimate;
    }
    return {contour.value, rays, err};
}

}  // namespace hyperzeta
