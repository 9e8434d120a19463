#include "hyperzeta/checks.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "hyperzeta/combinatorics.hpp"
#include "hyperzeta/constants.hpp"
#include "hyperzeta/errors.hpp"
#include "hyperzeta/evaluators.hpp"
#include "hyperzeta/multibernoulli.hpp"
#include "hyperzeta/qpoly.hpp"

namespace hyperzeta {
namespace {

// Platform-independent uniform draw on [lo, hi).
class Draw {
public:
    explicit Draw(std::uint64_t seed) : gen_(seed) {}
    double operator()(double lo, double hi) {
        const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

private:
    std::mt19937_64 gen_;
};

struct Recorder {
    std::string suite;
    std::vector<CheckResult>& out;

    void exact(const std::string& name, bool ok, const std::string& detail = {}) {
        out.push_back({suite, name, ok, ok ? 0.0 : 1.0, 0.0, detail});
    }
    void numeric(const std::string& name, double residual, double tol, const std::string& detail = {}) {
        out.push_back({suite, name, residual <= tol, residual, tol, detail});
    }
    // Runs body; evaluator errors are recorded as failures of that check.
    void guarded(const std::string& name, const std::function<void()>& body) {
        try {
            body();
        } catch (const Error& e) {
            out.push_back({suite, name, false, INFINITY, 0.0, e.code() + ": " + e.what()});
        }
    }
};

double rel(const BigComplex& a, const BigComplex& b) {
    const double scale = std::max(1.0, abs(b).to_double());
    return abs(a - b).to_double() / scale;
}

std::optional<HankelSpec> spec_for(const CheckConfig& cfg, const OmegaVector& omega, const BigComplex& w) {
    if (!cfg.lambda) return std::nullopt;
    HankelSpec hs = auto_spec(omega, w, cfg.policy);
    hs.lambda = BigReal(*cfg.lambda, cfg.policy.precision_bits);
    hs.ray_truncation = max(hs.ray_truncation, 4L * hs.lambda);
    hs.validate(omega);
    return hs;
}

void suite_combinatorics(const CheckConfig& cfg, std::vector<CheckResult>& out) {
    Recorder rec{"combinatorics", out};
    bool ok = true;
    for (int k = 1; k <= 12; ++k) {
        for (int mu = 1; mu <= 8; ++mu) {
            const Rational lhs = k * multi_harmonic(k, mu) - multi_harmonic(k, mu - 1) - k * multi_harmonic(k - 1, mu);
            ok = ok && lhs == 0;
        }
    }
    rec.exact("harmonic recurrence k<=12 mu<=8", ok);

    ok = true;
    for (int k = 0; k <= 10; ++k) {
        const RationalSeries f = gen_F(k, 11);
        for (int mu = 0; mu <= 10; ++mu) ok = ok && f[mu] == multi_harmonic(k, mu);
    }
    rec.exact("F_k coefficients equal H_k(mu), k,mu<=10", ok);

    rec.exact("H_2(2) = 7/4", multi_harmonic(2, 2) == Rational(7, 4));
    rec.exact("c^2_{1,2} = 3/2", coeff_c(2, 1, 2) == Rational(3, 2));
    rec.exact("(1/2)_2 = 3/4", pochhammer(Rational(1, 2), 2) == Rational(3, 4));

    // floating multiple Bernoulli expansion against the exact rational one
    const int bits = cfg.policy.precision_bits;
    Draw draw(cfg.seed);
    double worst = 0;
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<Rational> om_q;
        std::vector<BigComplex> om;
        for (int i = 0; i < 2; ++i) {
            Rational q(static_cast<long>(std::floor(draw(4, 17))), 8);
            q.canonicalize();
            om_q.push_back(q);
            om.emplace_back(to_real(q, bits));
        }
        Rational wq(static_cast<long>(std::floor(draw(1, 25))), 8);
        wq.canonicalize();
        const std::vector<Rational> exact = bernoulli_expansion_exact(om_q, wq, 6);
        const BernoulliExpansion ex = bernoulli_expansion(OmegaVector(om), BigComplex(to_real(wq, bits)), 6);
        for (int N = -2; N < 6; ++N) {
            worst = std::max(worst, rel(ex.a(N), to_complex(exact[static_cast<std::size_t>(N + 2)], bits)));
        }
    }
    rec.numeric("a_{2,N}(w) floating vs exact, random rational omega", worst, cfg.tol);
}

void suite_qpoly(const CheckConfig& cfg, std::vector<CheckResult>& out) {
    Recorder rec{"qpoly", out};
    const PrecisionPolicy& p = cfg.policy;
    const int bits = p.precision_bits;

    double worst = 0;
    for (int m = 0; m <= 6; ++m) {
        const PolyC q0 = q_poly(m, 0, p);
        for (int k = 0; k <= 6; ++k) {
            const PolyC s = s_poly(m, k, p);
            for (int d = 0; d <= m; ++d) worst = std::max(worst, rel(s.coeff(d, bits), q0.coeff(d, bits)));
        }
    }
    rec.numeric("S_{m,k} = mQ_0, m,k<=6", worst, cfg.tol);

    // generating identity: coefficient of s^m in (-1)^k/k! F_k(s) e^{sx} J_k(s)
    worst = 0;
    for (int k = 0; k <= 6; ++k) {
        const int order = 8;
        const LaurentSeries jet = q_generating_jet(k, order + 2, p);
        const RationalSeries F = gen_F(k, order);
        LaurentSeries Fs(0, order, bits);
        for (int j = 0; j < order; ++j) Fs.set_coeff(j, to_complex(F[j], bits));
        Rational pref(k % 2 == 0 ? 1 : -1);
        pref /= Rational(factorial(k));
        const LaurentSeries g = Fs * jet * to_complex(pref, bits);
        for (int m = 0; m <= 5; ++m) {
            const PolyC s = s_poly(m, k, p);
            for (int d = 0; d <= m; ++d) {
                // m! * [s^{m-d}] g / d!
                const BigReal w = to_real(Rational(factorial(m), factorial(d)), bits);
                worst = std::max(worst, rel(s.coeff(d, bits), g.coeff(m - d) * w));
            }
        }
    }
    rec.numeric("S_{m,k} from (-1)^k/k! F_k(s) generating jet, m<=5, k<=6", worst, cfg.tol);

    const BigComplex tpi = BigComplex::two_pi_i(bits);
    const PolyC q10 = q_poly(1, 0, p);
    const BigComplex c0 = const_gamma(p) / tpi - BigComplex(0.5, 0.0, bits);
    const BigComplex c1 = BigComplex(1L, bits) / tpi;
    rec.numeric("1Q_0 = log t/(2 pi i) + gamma/(2 pi i) - 1/2",
                std::max(rel(q10.coeff(0, bits), c0), rel(q10.coeff(1, bits), c1)), cfg.tol);

    worst = 0;
    for (int k = 0; k <= 6; ++k) {
        BigComplex expect = to_complex(Rational(factorial(k)), bits) / tpi;
        if (k % 2) expect = -expect;
        worst = std::max(worst, rel(q_poly(0, k, p).coeff(0, bits), expect));
    }
    rec.numeric("0Q_k = (-1)^k k!/(2 pi i), k<=6", worst, cfg.tol);
}

void suite_quadrature(const CheckConfig& cfg, std::vector<CheckResult>& out) {
    Recorder rec{"quadrature", out};
    const PrecisionPolicy& p = cfg.policy;
    const int bits = p.precision_bits;
    const std::vector<BigComplex> ws{BigComplex(0.5, 0.0, bits), BigComplex(1L, bits),
                                     BigComplex(exp(BigReal(1L, bits))), BigComplex(10L, bits)};
    const OmegaVector none;
    Draw draw(cfg.seed ^ 0x9e3779b97f4a7c15ULL);

    rec.guarded("r=0 contour reproduces w^{-s}", [&] {
        double worst = 0;
        std::ostringstream detail;
        for (int trial = 0; trial < 3; ++trial) {
            BigComplex s(draw(-3.0, 3.0), draw(-1.0, 1.0), bits);
            for (const auto& w : ws) {
                const EvalResult z = zeta_contour({s, w, none}, p, spec_for(cfg, none, w));
                worst = std::max(worst, rel(z.value, pow(w, -s)));
            }
            detail << (trial ? "," : "s=") << s.to_std();
        }
        rec.numeric("r=0 contour reproduces w^{-s}", worst, cfg.tol, detail.str());
    });

    rec.guarded("r=0 contour P matches closed form", [&] {
        double worst = 0;
        for (int m = 0; m <= 2; ++m) {
            for (int k = -1; k <= 2; ++k) {
                for (const auto& w : ws) {
                    const EvalResult v = balanced_P({m, k, w, none}, p, spec_for(cfg, none, w));
                    worst = std::max(worst, rel(v.value, p0_closed_form(m, k, w)));
                }
            }
        }
        rec.numeric("r=0 contour P matches closed form", worst, cfg.tol);
    });

    rec.guarded("lambda independence", [&] {
        const OmegaVector om = OmegaVector::from_doubles({1.0, draw(0.5, 2.0)}, bits);
        const BigComplex w(1.5, 0.0, bits);
        const ZetaParams zp{BigComplex(0.3, 0.2, bits), w, om};
        HankelSpec hs = auto_spec(om, w, p);
        const EvalResult a = zeta_contour(zp, p, hs);
        hs.lambda = hs.lambda * 0.5;
        const EvalResult b = zeta_contour(zp, p, hs);
        rec.numeric("lambda independence", rel(a.value, b.value), cfg.tol);
    });
}

void suite_evaluators(const CheckConfig& cfg, std::vector<CheckResult>& out) {
    Recorder rec{"evaluators", out};
    const PrecisionPolicy& p = cfg.policy;
    const int bits = p.precision_bits;
    Draw draw(cfg.seed ^ 0xd1b54a32d192ed03ULL);
    const OmegaVector one = OmegaVector::from_doubles({1.0}, bits);

    rec.guarded("r=1 contour vs Hurwitz", [&] {
        double worst = 0;
        for (int trial = 0; trial < 4; ++trial) {
            double s = draw(-4.0, 3.0);
            if (std::abs(s - std::round(s)) < 0.05) s += 0.25;
            const BigComplex sc(s, 0.0, bits), w(draw(0.5, 3.0), 0.0, bits);
            const EvalResult z = zeta_contour({sc, w, one}, p, spec_for(cfg, one, w));
            worst = std::max(worst, rel(z.value, hurwitz_oracle(sc, w, p)));
        }
        rec.numeric("r=1 contour vs Hurwitz", worst, cfg.tol);
    });

    rec.guarded("direct sum vs contour, r=2", [&] {
        double worst = 0;
        for (int trial = 0; trial < 2; ++trial) {
            const OmegaVector om = OmegaVector::from_doubles({draw(0.5, 2.0), draw(0.5, 2.0)}, bits);
            for (double wv : {1.0, 2.5}) {
                const ZetaParams zp{BigComplex(3.5, 0.0, bits), BigComplex(wv, 0.0, bits), om};
                const EvalResult d = zeta_direct(zp, cfg.tol * 1e-3, p);
                const EvalResult c = zeta_contour(zp, p, spec_for(cfg, om, zp.w));
                worst = std::max(worst, rel(d.value, c.value));
            }
        }
        rec.numeric("direct sum vs contour, r=2", worst, cfg.tol);
    });

    rec.guarded("log 1Gamma_{1,0}(1) = -log(2 pi)/2", [&] {
        const BigComplex w(1L, bits);
        const EvalResult g = log_hyper_gamma({1, 0, w, one}, p, spec_for(cfg, one, w));
        const BigComplex expect(-log(2L * BigReal::pi(bits)) / 2L);
        rec.numeric("log 1Gamma_{1,0}(1) = -log(2 pi)/2", rel(g.value, expect), cfg.tol);
    });

    rec.guarded("log 0Gamma_{1,1}(w) = -B_2(w)/2", [&] {
        double worst = 0;
        for (double wv : {0.5, 1.0, 3.0}) {
            const BigComplex w(wv, 0.0, bits);
            const EvalResult g = log_hyper_gamma({0, 1, w, one}, p, spec_for(cfg, one, w));
            worst = std::max(worst, rel(g.value, -bernoulli_poly_oracle(2, w) / 2L));
        }
        rec.numeric("log 0Gamma_{1,1}(w) = -B_2(w)/2", worst, cfg.tol);
    });

    rec.guarded("P single contour vs combination", [&] {
        double worst = 0;
        const OmegaVector om = OmegaVector::from_doubles({1.0, draw(0.5, 2.0)}, bits);
        const BigComplex w(draw(0.5, 3.0), 0.0, bits);
        for (int m = 0; m <= 2; ++m) {
            for (int k = 0; k <= 2; ++k) {
                const EvalResult a = balanced_P({m, k, w, om}, p);
                const EvalResult b = balanced_P_combination({m, k, w, om}, p);
                worst = std::max(worst, rel(a.value, b.value));
            }
        }
        rec.numeric("P single contour vs combination", worst, cfg.tol);
    });

    rec.guarded("hierarchy dP_{r,k}/dw = -P_{r,k-1}", [&] {
        const double tol = 1e-10;
        double worst = 0;
        const OmegaVector om = OmegaVector::from_doubles({1.0, draw(0.5, 2.0)}, bits);
        const BigComplex w(draw(1.0, 3.0), 0.0, bits);
        const BigReal h = ldexp(BigReal(1L, bits), -bits / 4);
        for (int m = 1; m <= 2; ++m) {
            const int k = 1;
            auto f = [&](const BigComplex& x) { return balanced_P({m, k, x, om}, p).value; };
            const BigComplex lhs = central_derivative(f, w, h);
            const BigComplex rhs = -balanced_P({m, k - 1, w, om}, p).value;
            worst = std::max(worst, rel(lhs, rhs));
        }
        rec.numeric("hierarchy dP_{r,k}/dw = -P_{r,k-1}", worst, tol);
    });
}

}  // namespace

const std::vector<std::string>& check_suites() {
    static const std::vector<std::string> names{"combinatorics", "qpoly", "quadrature", "evaluators"};
    return names;
}

std::vector<CheckResult> run_checks(const std::string& suite, const CheckConfig& cfg) {
    cfg.policy.validate();
    if (!(cfg.tol > 0)) throw InvalidParameter("tolerance must be positive", "tol");
    std::vector<CheckResult> out;
    const bool all = suite == "all";
    bool known = all;
    if (all || suite == "combinatorics") known = true, suite_combinatorics(cfg, out);
    if (all || suite == "qpoly") known = true, suite_qpoly(cfg, out);
    if (all || suite == "quadrature") known = true, suite_quadrature(cfg, out);
    if (all || suite == "evaluators") known = true, suite_evaluators(cfg, out);
    if (!known) throw InvalidParameter("unknown check suite '" + suite + "'", "suite");
    return out;
}

}  // namespace hyperzeta
