#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <string>
#include <variant>

#include "hyperzeta/asymptotics.hpp"
#include "hyperzeta/checks.hpp"
#include "hyperzeta/combinatorics.hpp"
#include "hyperzeta/errors.hpp"
#include "hyperzeta/evaluators.hpp"
#include "hyperzeta/qpoly.hpp"

namespace py = pybind11;
using namespace hyperzeta;

namespace {

// Python numbers are taken at face value (a float is its exact binary value);
// strings are parsed at full precision.
using Number = std::variant<std::complex<double>, std::string>;

BigComplex to_big(const Number& x, int bits) {
    if (const auto* s = std::get_if<std::string>(&x)) return BigComplex::parse(*s, bits);
    return BigComplex(std::get<std::complex<double>>(x), bits);
}

OmegaVector to_omega(const std::vector<Number>& xs, int bits) {
    std::vector<BigComplex> v;
    for (const auto& x : xs) v.push_back(to_big(x, bits));
    return OmegaVector(std::move(v));
}

py::object fraction(const Rational& q) {
    const py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(q.get_str());
}

py::dict complex_dict(const BigComplex& z, int bits) {
    py::dict d;
    d["value"] = z.to_std();
    d["re"] = z.real().to_string(decimal_digits(bits));
    d["im"] = z.imag().to_string(decimal_digits(bits));
    return d;
}

py::dict result_dict(const EvalResult& r, int bits) {
    py::dict d = complex_dict(r.value, bits);
    d["err_estimate"] = r.err_estimate;
    d["method"] = to_string(r.method);
    return d;
}

AsymExperiment experiment(int m, int k, const std::vector<Number>& omega, const std::vector<Number>& alpha,
                          const Number& a, const std::vector<double>& w_grid, bool strict, int bits) {
    AsymExperiment e;
    e.omega = to_omega(omega, bits);
    e.alpha = to_omega(alpha, bits);
    e.a = to_big(a, bits);
    e.m = m;
    e.k = k;
    e.w_grid = w_grid;
    e.strict_statement = strict;
    return e;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Barnes zeta, hypermultiple gamma and balanced functions in arbitrary precision";

    static py::exception<Error> base(m, "HyperzetaError");
    static py::exception<Error> domain(m, "DomainError", base.ptr());
    static py::exception<Error> precision(m, "PrecisionError", base.ptr());
    static py::exception<Error> fit(m, "FitUnstable", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            std::string msg = e.code() + ": " + e.what();
            if (!e.parameter().empty()) msg += " (parameter " + e.parameter() + ")";
            switch (e.kind()) {
                case ErrorKind::domain: py::set_error(domain, msg.c_str()); break;
                case ErrorKind::precision: py::set_error(precision, msg.c_str()); break;
                case ErrorKind::fit: py::set_error(fit, msg.c_str()); break;
            }
        }
    });

    const auto bits_arg = py::arg("precision_bits") = kDefaultPrecisionBits;

    m.def(
        "zeta",
        [](const Number& s, const Number& w, const std::vector<Number>& omega, int bits) {
            return result_dict(zeta({to_big(s, bits), to_big(w, bits), to_omega(omega, bits)},
                                    PrecisionPolicy::with_bits(bits)),
                               bits);
        },
        py::arg("s"), py::arg("w"), py::arg("omega"), bits_arg, "Barnes zeta_r(s, w; omega).");

    m.def(
        "zeta_direct",
        [](const Number& s, const Number& w, const std::vector<Number>& omega, double tol, int bits) {
            return result_dict(zeta_direct({to_big(s, bits), to_big(w, bits), to_omega(omega, bits)}, tol,
                                           PrecisionPolicy::with_bits(bits)),
                               bits);
        },
        py::arg("s"), py::arg("w"), py::arg("omega"), py::arg("tol") = 1e-30, bits_arg,
        "Lattice sum with Euler-Maclaurin tails; needs Re s > r + 0.25.");

    m.def(
        "log_hyper_gamma",
        [](int mm, int k, const Number& w, const std::vector<Number>& omega, int bits) {
            return result_dict(log_hyper_gamma({mm, k, to_big(w, bits), to_omega(omega, bits)},
                                               PrecisionPolicy::with_bits(bits)),
                               bits);
        },
        py::arg("m"), py::arg("k"), py::arg("w"), py::arg("omega"), bits_arg, "log mGamma_{r,k}(w; omega).");

    m.def(
        "balanced_P",
        [](int mm, int k, const Number& w, const std::vector<Number>& omega, bool combination, int bits) {
            const GammaParams gp{mm, k, to_big(w, bits), to_omega(omega, bits)};
            const PrecisionPolicy p = PrecisionPolicy::with_bits(bits);
            return result_dict(combination ? balanced_P_combination(gp, p) : balanced_P(gp, p), bits);
        },
        py::arg("m"), py::arg("k"), py::arg("w"), py::arg("omega"), py::arg("combination") = false, bits_arg,
        "Balanced function mP_{r,k}(w; omega); any integer k unless combination=True.");

    m.def(
        "p0_closed_form",
        [](int mm, int k, const Number& w, int bits) { return complex_dict(p0_closed_form(mm, k, to_big(w, bits)), bits); },
        py::arg("m"), py::arg("k"), py::arg("w"), bits_arg, "mP_{0,k}(w) in closed form.");

    m.def(
        "bernoulli_a",
        [](const std::vector<Number>& omega, int N, const Number& w, int bits) {
            return complex_dict(bernoulli_a(to_omega(omega, bits), N, to_big(w, bits)), bits);
        },
        py::arg("omega"), py::arg("N"), py::arg("w"), bits_arg, "Multiple Bernoulli polynomial a_{r,N}(w; omega).");

    m.def("multi_harmonic", [](int k, int mu) { return fraction(multi_harmonic(k, mu)); }, py::arg("k"), py::arg("mu"));
    m.def("coeff_c", [](int mm, int mu, int k) { return fraction(coeff_c(mm, mu, k)); }, py::arg("m"), py::arg("mu"),
          py::arg("k"));
    m.def(
        "gen_F",
        [](int k, int order) {
            py::list out;
            for (const auto& q : gen_F(k, order).coeffs) out.append(fraction(q));
            return out;
        },
        py::arg("k"), py::arg("order"), "Coefficients of k!/(1-s)_k.");

    auto poly_list = [](const PolyC& p) {
        std::vector<std::complex<double>> out;
        for (const auto& c : p.coeffs()) out.push_back(c.to_std());
        return out;
    };
    m.def(
        "q_poly", [poly_list](int mm, int k, int bits) { return poly_list(q_poly(mm, k, PrecisionPolicy::with_bits(bits))); },
        py::arg("m"), py::arg("k"), bits_arg, "Coefficients of mQ_k(x), lowest degree first.");
    m.def(
        "s_poly", [poly_list](int mm, int k, int bits) { return poly_list(s_poly(mm, k, PrecisionPolicy::with_bits(bits))); },
        py::arg("m"), py::arg("k"), bits_arg, "Coefficients of S_{m,k}(x), lowest degree first.");

    m.def(
        "asym",
        [](int mm, int k, const std::vector<Number>& omega, const std::vector<Number>& alpha, const Number& a,
           const std::vector<double>& w_grid, bool strict, bool do_fit, int bits) {
            const PrecisionPolicy p = PrecisionPolicy::with_bits(bits);
            const AsymExperiment e = experiment(mm, k, omega, alpha, a, w_grid, strict, bits);
            const auto rows = run_experiment(e, p);
            py::list out;
            for (const auto& r : rows) {
                py::dict d;
                d["w"] = r.w;
                d["lhs"] = r.lhs.to_std();
                d["rhs"] = r.rhs_sum.to_std();
                d["err_abs"] = abs(r.error).to_double();
                d["err_norm"] = r.normalized_error;
                d["err_estimate"] = r.err_estimate;
                out.append(d);
            }
            py::dict res;
            res["rows"] = out;
            if (do_fit) {
                const FitResult f = fit_one_over_w(e, rows, p);
                res["fit"] = py::dict(py::arg("fitted") = f.fitted.to_std(), py::arg("reference") = f.reference.to_std(),
                                      py::arg("relative_error") = f.relative_error,
                                      py::arg("relative_discrepancy") = f.relative_discrepancy);
            }
            return res;
        },
        py::arg("m") = 1, py::arg("k") = 0, py::arg("omega") = std::vector<Number>{std::complex<double>(1.0)},
        py::arg("alpha") = std::vector<Number>{std::complex<double>(1.0)}, py::arg("a") = Number(std::complex<double>(0.5)),
        py::arg("w_grid") = std::vector<double>{10, 20, 40, 80, 160}, py::arg("strict_statement") = false,
        py::arg("fit") = false, bits_arg, "Large-w expansion experiment; rows ordered by w.");

    m.def(
        "run_checks",
        [](const std::string& suite, std::uint64_t seed, double tol, int bits) {
            CheckConfig cfg;
            cfg.policy = PrecisionPolicy::with_bits(bits);
            cfg.seed = seed;
            cfg.tol = tol;
            py::list out;
            for (const auto& r : run_checks(suite, cfg)) {
                out.append(py::dict(py::arg("suite") = r.suite, py::arg("name") = r.name, py::arg("passed") = r.passed,
                                    py::arg("residual") = r.residual, py::arg("tolerance") = r.tolerance,
                                    py::arg("detail") = r.detail));
            }
            return out;
        },
        py::arg("suite") = "all", py::arg("seed") = 0, py::arg("tol") = 1e-20, bits_arg);
}
