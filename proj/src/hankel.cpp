#include "hyperzeta/hankel.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "hyperzeta/errors.hpp"

namespace hyperzeta {

namespace {

using Panel = std::pair<BigReal, BigReal>;

class Prepared {
public:
    explicit Prepared(const IntegrandSpec& spec) : spec_(spec), bits_(spec.w.bits()) {
        neg_w_ = -spec.w;
        for (const auto& o : spec.omega.omegas()) neg_omegas_.push_back(-o);
        pole_floor_ = ldexp(BigReal(1L, bits_), -bits_ / 2);
        one_ = BigReal(1L, bits_);
        const BigComplex two_pi_i = BigComplex::two_pi_i(bits_);
        if (const auto* lp = std::get_if<LogPolyPower>(&spec.power)) {
            log_poly_ = true;
            k_ = lp->k;
            poly_ = lp->poly;
            jump_poly_ = poly_.shifted(two_pi_i) - poly_;
            has_jump_ = poly_.degree() >= 1;
        } else {
            const auto& cp = std::get<ComplexPower>(spec.power);
            s_ = cp.s;
            s_minus_1_ = cp.s - 1L;
            jump_factor_ = expm1(two_pi_i * cp.s);
            has_jump_ = !jump_factor_.is_zero();
        }
    }

    int bits() const { return bits_; }
    bool has_jump() const { return has_jump_; }
    bool log_poly() const { return log_poly_; }
    int k() const { return k_; }

    /// f_omega(t) e^{-wt} R(t)
    BigComplex base(const BigComplex& t) const {
        BigComplex v = exp(neg_w_ * t);
        for (const auto& o : neg_omegas_) {
            const BigComplex ot = o * t;
            BigComplex d = expm1(ot);  // e^{-omega t} - 1
            // relative to |omega t| so the removable approach to t = 0 is not flagged
            if (abs(d) < pole_floor_ * min(abs(ot), one_)) {
                throw PolesTooClose("integration path passes too close to a pole of f_omega");
            }
            v = v / (-d);
        }
        if (spec_.t_factor) v = v * (*spec_.t_factor)(t);
        return v;
    }

    /// outbound (arg 2 pi) minus inbound (arg 0) integrand at real t > 0.
    BigComplex ray(const BigReal& t) const {
        const BigComplex b = base(BigComplex(t));
        const BigReal lt = log(t);
        if (log_poly_) return b * pow(t, -static_cast<long>(k_) - 1) * jump_poly_(BigComplex(lt));
        return b * exp(s_minus_1_ * BigComplex(lt)) * jump_factor_;
    }

    /// integrand times dt/dtheta on t = lambda e^{i theta}.
    BigComplex circle(const BigReal& lambda, const BigReal& log_lambda, const BigReal& theta) const {
        BigReal sn(bits_), cs(bits_);
        mpfr_sin_cos(sn.raw(), cs.raw(), theta.raw(), MPFR_RNDN);
        const BigComplex t(lambda * cs, lambda * sn);
        const BigComplex logt(log_lambda, theta);
        const BigComplex b = base(t);
        BigComplex v(bits_);
        if (log_poly_) {
            // t^{-k-1} dt = i t^{-k} dtheta
            const BigReal ang = theta * static_cast<long>(-k_);
            BigReal s2(bits_), c2(bits_);
            mpfr_sin_cos(s2.raw(), c2.raw(), ang.raw(), MPFR_RNDN);
            const BigReal mag = pow(lambda, -static_cast<long>(k_));
            v = b * BigComplex(mag * c2, mag * s2) * poly_(logt);
        } else {
            v = b * exp(s_ * logt);
        }
        return {-v.imag(), v.real()};  // times i
    }

    /// f_omega e^{-wt} R(t) t^{-k-1} (log t)^D on the positive real axis.
    BigComplex real_axis(const BigReal& t, int D) const {
        const BigComplex b = base(BigComplex(t));
        return b * (pow(t, -static_cast<long>(k_) - 1) * pow(log(t), static_cast<long>(D)));
    }

private:
    const IntegrandSpec& spec_;
    int bits_;
    BigComplex neg_w_;
    std::vector<BigComplex> neg_omegas_;
    BigReal pole_floor_;
    BigReal one_;
    bool log_poly_ = false;
    bool has_jump_ = false;
    int k_ = 0;
    PolyC poly_;
    PolyC jump_poly_;
    BigComplex s_;
    BigComplex s_minus_1_;
    BigComplex jump_factor_;
};

struct PieceSum {
    BigComplex value;
    BigReal abs_sum;
};

template <class F>
PieceSum integrate_panels(const std::vector<Panel>& panels, const GaussLegendreRule& rule, int bits, F&& f) {
    std::vector<BigComplex> terms;
    terms.reserve(panels.size() * rule.nodes.size());
    BigReal abs_sum(bits);
    for (const auto& [a, b] : panels) {
        const BigReal half = ldexp(b - a, -1);
        const BigReal mid = ldexp(a + b, -1);
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            BigComplex v = f(mid + half * rule.nodes[i]) * (half * rule.weights[i]);
            abs_sum += abs(v);
            terms.push_back(std::move(v));
        }
    }
    return {pairwise_sum(terms, bits), abs_sum};
}

std::vector<Panel> split(const std::vector<Panel>& coarse, int level) {
    if (level == 0) return coarse;
    const long pieces = 1L << level;
    std::vector<Panel> out;
    out.reserve(coarse.size() * static_cast<std::size_t>(pieces));
    for (const auto& [a, b] : coarse) {
        const BigReal step = (b - a) / pieces;
        for (long j = 0; j < pieces; ++j) {
            out.emplace_back(a + step * j, j + 1 == pieces ? b : a + step * (j + 1));
        }
    }
    return out;
}

// geometric (ratio 2) from lambda, widths capped at max_width, ending at T
std::vector<Panel> ray_panels(const HankelSpec& spec) {
    std::vector<Panel> out;
    BigReal a = spec.lambda;
    while (a < spec.ray_truncation) {
        BigReal width = a;
        if (width > spec.max_panel_width) width = spec.max_panel_width;
        BigReal b = a + width;
        if (b > spec.ray_truncation) b = spec.ray_truncation;
        out.emplace_back(a, b);
        a = b;
    }
    return out;
}

std::vector<Panel> circle_panels(int count, int bits) {
    const BigReal two_pi = ldexp(BigReal::pi(bits), 1);
    std::vector<Panel> out;
    for (int j = 0; j < count; ++j) {
        out.emplace_back(two_pi * static_cast<long>(j) / static_cast<long>(count),
                         j + 1 == count ? two_pi : two_pi * static_cast<long>(j + 1) / static_cast<long>(count));
    }
    return out;
}

BigReal tail_bound(const Prepared& prep, const BigReal& T, const BigReal& re_w, int D, bool real_axis) {
    const BigComplex v = real_axis ? prep.real_axis(T, D) : prep.ray(T);
    return abs(v) * ldexp(BigReal(1L, prep.bits()), 1) / re_w;
}

// Pushes T out until the integrand tail beyond it is below target/10.
BigReal tighten_truncation(const Prepared& prep, const IntegrandSpec& ispec, const HankelSpec& spec, int D,
                           bool real_axis) {
    BigReal T = spec.ray_truncation;
    if (!real_axis && !prep.has_jump()) return T;
    const BigReal re_w = ispec.w.real();
    const double target = spec.target_abs_error / 10;
    for (int iter = 0; iter < 200; ++iter) {
        if (tail_bound(prep, T, re_w, D, real_axis) < target) {
            // require the bound to stay small a little further out (integrand may still be rising)
            if (tail_bound(prep, T * 2L, re_w, D, real_axis) < target) return T;
        }
        T = T * 3L / 2L;
    }
    throw NodeBudgetExceeded("could not find a ray truncation meeting the tail target");
}

int default_gl_order(int bits) { return std::max(20, (bits + 5) / 6); }

}  // namespace

int HankelSpec::ray_nodes() const {
    return static_cast<int>(ray_panels(*this).size()) * (1 << refinement) * gl_order;
}

void HankelSpec::validate(const OmegaVector& omega) const {
    if (!(lambda > 0.0)) throw InvalidParameter("lambda must be positive", "lambda");
    const BigReal bound = omega.pole_bound(lambda.bits());
    if (bound.is_finite() && !(lambda < bound * 0.9)) {
        throw InvalidParameter("lambda must be below 0.9 * min|2 pi / omega_i|", "lambda");
    }
    if (!(ray_truncation > lambda)) throw InvalidParameter("ray truncation must exceed lambda", "ray_truncation");
    if (gl_order < 2) throw InvalidParameter("gl_order must be at least 2", "gl_order");
    if (circle_panels < 1 || (circle_panels & (circle_panels - 1)) != 0) {
        throw InvalidParameter("circle_panels must be a power of two", "circle_panels");
    }
    if (!(max_panel_width > 0.0)) throw InvalidParameter("max_panel_width must be positive", "max_panel_width");
}

HankelSpec auto_spec(const OmegaVector& omega, const BigComplex& w, const PrecisionPolicy& p) {
    p.validate();
    if (!(w.real() > 0.0)) throw InvalidParameter("Re(w) must be positive", "w");
    const int bits = p.precision_bits;
    HankelSpec spec;
    const BigReal two_pi = ldexp(BigReal::pi(bits), 1);
    BigReal cap = omega.pole_bound(bits);
    if (cap > two_pi) cap = two_pi;
    spec.lambda = ldexp(cap, -1);
    const BigReal mod_w = abs(w);
    if (mod_w * spec.lambda > 8.0) spec.lambda = BigReal(8L, bits) / mod_w;
    spec.ray_truncation = BigReal(30L, bits) / w.real();
    if (spec.ray_truncation < spec.lambda * 4L) spec.ray_truncation = spec.lambda * 4L;
    spec.max_panel_width = BigReal(6L, bits) / mod_w;
    spec.gl_order = default_gl_order(bits);
    spec.circle_panels = 8;
    spec.refinement = 0;
    spec.max_refinements = 5;
    spec.target_abs_error = p.target_abs_error;
    spec.target_rel_error = p.target_rel_error;
    return spec;
}

QuadResult hankel_integrate(const IntegrandSpec& ispec, const HankelSpec& hspec) {
    hspec.validate(ispec.omega);
    if (!(ispec.w.real() > 0.0)) throw InvalidParameter("Re(w) must be positive", "w");
    const Prepared prep(ispec);
    const int bits = prep.bits();
    HankelSpec spec = hspec;
    spec.ray_truncation = tighten_truncation(prep, ispec, spec, 0, false);

    const GaussLegendreRule& rule = gauss_legendre(spec.gl_order, bits);
    const BigReal lambda = spec.lambda.with_bits(bits);
    const BigReal log_lambda = log(lambda);
    const std::vector<Panel> rays = ray_panels(spec);

    struct Level {
        PieceSum circle;
        PieceSum ray;
    };
    auto eval_level = [&](int level) {
        Level out{integrate_panels(circle_panels(spec.circle_panels << level, bits), rule, bits,
                                   [&](const BigReal& th) { return prep.circle(lambda, log_lambda, th); }),
                  {BigComplex(bits), BigReal(bits)}};
        if (prep.has_jump()) {
            out.ray = integrate_panels(split(rays, level), rule, bits, [&](const BigReal& t) { return prep.ray(t); });
        }
        return out;
    };

    int level = spec.refinement;
    Level coarse = eval_level(level);
    for (;;) {
        Level fine = eval_level(level + 1);
        const BigComplex total = fine.circle.value + fine.ray.value;
        const BigComplex coarse_total = coarse.circle.value + coarse.ray.value;
        const double diff = abs(total - coarse_total).to_double();
        const double floor =
            ((fine.circle.abs_sum + fine.ray.abs_sum) * std::ldexp(1.0, -(bits - 12))).to_double();
        const double tol = std::max(spec.target_abs_error, spec.target_rel_error * abs(total).to_double());
        if (diff <= std::max(tol, floor)) {
            spec.refinement = level;
            return {total, std::max(diff, floor), fine.circle.value, fine.ray.value, spec};
        }
        if (level + 2 > spec.max_refinements) {
            throw NodeBudgetExceeded("Hankel quadrature did not converge within the refinement budget");
        }
        coarse = std::move(fine);
        ++level;
    }
}

QuadResult ray_only_integrate(const IntegrandSpec& ispec, int D, const HankelSpec& hspec) {
    if (!std::holds_alternative<LogPolyPower>(ispec.power)) {
        throw InvalidParameter("ray_only_integrate needs a t^{-k-1} (log t)^D integrand", "power");
    }
    if (D < 0) throw InvalidParameter("D must be non-negative", "D");
    hspec.validate(ispec.omega);
    const Prepared prep(ispec);
    const int bits = prep.bits();
    HankelSpec spec = hspec;
    spec.ray_truncation = tighten_truncation(prep, ispec, spec, D, true);

    // graded panels toward t = 0 until the leftover [0, a] is negligible
    const double target = spec.target_abs_error / 10;
    std::vector<Panel> inner;
    BigReal a = spec.lambda;
    for (int j = 0;; ++j) {
        if (j > 600) throw NodeBudgetExceeded("integrand is not small enough near t = 0");
        const BigReal lo = ldexp(a, -1);
        inner.emplace_back(lo, a);
        a = lo;
        if ((abs(prep.real_axis(a, D)) * a) < target) break;
    }
    std::vector<Panel> panels(inner.rbegin(), inner.rend());
    for (auto& pnl : ray_panels(spec)) panels.push_back(std::move(pnl));

    const GaussLegendreRule& rule = gauss_legendre(spec.gl_order, bits);
    auto eval_level = [&](int level) {
        return integrate_panels(split(panels, level), rule, bits,
                                [&](const BigReal& t) { return prep.real_axis(t, D); });
    };
    int level = spec.refinement;
    PieceSum coarse = eval_level(level);
    for (;;) {
        PieceSum fine = eval_level(level + 1);
        const double diff = abs(fine.value - coarse.value).to_double();
        const double floor = (fine.abs_sum * std::ldexp(1.0, -(bits - 12))).to_double() + target;
        const double tol = std::max(spec.target_abs_error, spec.target_rel_error * abs(fine.value).to_double());
        if (diff <= std::max(tol, floor)) {
            spec.refinement = level;
            return {fine.value, std::max(diff, floor), BigComplex(bits), fine.value, spec};
        }
        if (level + 2 > spec.max_refinements) {
            throw NodeBudgetExceeded("real-axis quadrature did not converge within the refinement budget");
        }
        coarse = std::move(fine);
        ++level;
    }
}

const GaussLegendreRule& gauss_legendre(int order, int bits) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<GaussLegendreRule>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{order, bits}];
    if (slot) return *slot;

    const int work = bits + 32;
    auto rule = std::make_unique<GaussLegendreRule>();
    rule->nodes.assign(static_cast<std::size_t>(order), BigReal(bits));
    rule->weights.assign(static_cast<std::size_t>(order), BigReal(bits));
    const BigReal one(1L, work);
    const BigReal stop = ldexp(one, -(work - 8));
    for (int i = 0; i < (order + 1) / 2; ++i) {
        BigReal x(std::cos(M_PI * (i + 0.75) / (order + 0.5)), work);
        BigReal dp(work);
        for (int iter = 0; iter < 100; ++iter) {
            BigReal p0 = one, p1 = x;
            for (int j = 1; j < order; ++j) {
                BigReal p2 = (x * p1 * static_cast<long>(2 * j + 1) - p0 * static_cast<long>(j)) / static_cast<long>(j + 1);
                p0 = std::move(p1);
                p1 = std::move(p2);
            }
            // P_n = p1, P_{n-1} = p0
            dp = (x * p1 - p0) * static_cast<long>(order) / (x * x - 1L);
            BigReal dx = p1 / dp;
            x -= dx;
            if (abs(dx) < stop) {
                if (iter > 0) break;
            }
        }
        // recompute derivative at the converged node
        BigReal p0 = one, p1 = x;
        for (int j = 1; j < order; ++j) {
            BigReal p2 = (x * p1 * static_cast<long>(2 * j + 1) - p0 * static_cast<long>(j)) / static_cast<long>(j + 1);
            p0 = std::move(p1);
            p1 = std::move(p2);
        }
        dp = (x * p1 - p0) * static_cast<long>(order) / (x * x - 1L);
        const BigReal weight = BigReal(2L, work) / ((one - x * x) * dp * dp);
        rule->nodes[i] = (-x).with_bits(bits);
        rule->nodes[order - 1 - i] = x.with_bits(bits);
        rule->weights[i] = weight.with_bits(bits);
        rule->weights[order - 1 - i] = weight.with_bits(bits);
    }
    if (order % 2 == 1) rule->nodes[order / 2] = BigReal(bits);
    slot = std::move(rule);
    return *slot;
}

BigComplex pairwise_sum(const std::vector<BigComplex>& terms, int bits) {
    if (terms.empty()) return BigComplex(bits);
    std::vector<BigComplex> level = terms;
    while (level.size() > 1) {
        std::vector<BigComplex> next;
        next.reserve((level.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] + level[i + 1]);
        if (level.size() % 2 == 1) next.push_back(std::move(level.back()));
        level = std::move(next);
    }
    return level[0];
}

}  // namespace hyperzeta
