// hyperzeta command-line front end.
//
// Exit codes: 0 ok, 1 failed check, 2 usage/parse error, 3 domain error,
// 4 precision target not met, 5 unstable asymptotic fit, 6 internal error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperzeta/asymptotics.hpp"
#include "hyperzeta/checks.hpp"
#include "hyperzeta/errors.hpp"
#include "hyperzeta/evaluators.hpp"

using namespace hyperzeta;
using nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kDomain = 3, kPrecision = 4, kFit = 5, kInternal = 6 };

struct Config {
    int precision_bits = kDefaultPrecisionBits;
    double tol = 1e-20;
    std::optional<double> lambda;
    std::string format;  // empty: json for eval, plain for check, csv for asym
    std::uint64_t seed = 0;
};

void report_error(const std::string& code, const std::string& message, const std::string& parameter) {
    ordered_json j;
    j["code"] = code;
    j["message"] = message;
    j["parameter"] = parameter;
    std::cerr << j.dump() << '\n';
}

int exit_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::domain: return kDomain;
        case ErrorKind::precision: return kPrecision;
        case ErrorKind::fit: return kFit;
    }
    return kInternal;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) parts.push_back(item);
    return parts;
}

OmegaVector parse_omega(const std::string& s, int bits, const char* name) {
    std::vector<BigComplex> v;
    if (s.empty()) return OmegaVector();
    try {
        for (const auto& item : split_list(s)) v.push_back(BigComplex::parse(item, bits));
        return OmegaVector(std::move(v));
    } catch (const InvalidParameter& e) {
        throw InvalidParameter(e.what(), name);
    }
}

BigComplex parse_complex(const std::string& s, int bits, const char* name) {
    try {
        return BigComplex::parse(s, bits);
    } catch (const InvalidParameter& e) {
        throw InvalidParameter(e.what(), name);
    }
}

PrecisionPolicy policy_of(const Config& cfg) {
    return PrecisionPolicy::with_bits(cfg.precision_bits);
}

std::optional<HankelSpec> lambda_spec(const Config& cfg, const OmegaVector& omega, const BigComplex& w,
                                      const PrecisionPolicy& p) {
    if (!cfg.lambda) return std::nullopt;
    HankelSpec hs = auto_spec(omega, w, p);
    hs.lambda = BigReal(*cfg.lambda, p.precision_bits);
    hs.ray_truncation = max(hs.ray_truncation, 4L * hs.lambda);
    try {
        hs.validate(omega);
    } catch (const InvalidParameter& e) {
        throw InvalidParameter(e.what(), "lambda");
    }
    return hs;
}

std::string num(const BigReal& x, int bits) { return x.to_string(decimal_digits(bits)); }

// ---- eval -----------------------------------------------------------------

struct EvalArgs {
    std::string function;
    std::string s = "2", w = "1", omega = "1";
    int m = 1, k = 0;
};

int cmd_eval(const Config& cfg, const EvalArgs& a) {
    const PrecisionPolicy p = policy_of(cfg);
    const int bits = p.precision_bits;
    const BigComplex w = parse_complex(a.w, bits, "w");
    const OmegaVector omega = parse_omega(a.omega, bits, "omega");
    const auto spec = lambda_spec(cfg, omega, w, p);
    EvalResult res;
    if (a.function == "zeta") {
        res = zeta({parse_complex(a.s, bits, "s"), w, omega}, p, spec);
    } else if (a.function == "P") {
        res = balanced_P({a.m, a.k, w, omega}, p, spec);
    } else {
        res = log_hyper_gamma({a.m, a.k, w, omega}, p, spec);
    }
    const std::string fmt = cfg.format.empty() ? "json" : cfg.format;
    const std::string re = num(res.value.real(), bits), im = num(res.value.imag(), bits);
    if (fmt == "json") {
        ordered_json j;
        j["function"] = a.function;
        j["value"] = {{"re", re}, {"im", im}};
        j["err_estimate"] = res.err_estimate;
        j["method"] = to_string(res.method);
        j["precision_bits"] = bits;
        std::cout << j.dump(2) << '\n';
    } else if (fmt == "csv") {
        std::cout << "value_re,value_im,err_estimate,method\n"
                  << re << ',' << im << ',' << res.err_estimate << ',' << to_string(res.method) << '\n';
    } else {
        std::cout << "value        " << re << " + " << im << " i\n"
                  << "err_estimate " << res.err_estimate << '\n'
                  << "method       " << to_string(res.method) << '\n';
    }
    return kOk;
}

// ---- check ----------------------------------------------------------------

int cmd_check(const Config& cfg, const std::string& suite) {
    CheckConfig cc;
    cc.policy = policy_of(cfg);
    cc.tol = cfg.tol;
    cc.seed = cfg.seed;
    cc.lambda = cfg.lambda;
    const std::vector<CheckResult> results = run_checks(suite, cc);
    bool all_ok = true;
    for (const auto& r : results) all_ok = all_ok && r.passed;

    const std::string fmt = cfg.format.empty() ? "plain" : cfg.format;
    if (fmt == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : results) {
            arr.push_back({{"suite", r.suite}, {"name", r.name}, {"passed", r.passed},
                           {"residual", r.residual}, {"tolerance", r.tolerance}, {"detail", r.detail}});
        }
        std::cout << ordered_json{{"seed", cfg.seed}, {"passed", all_ok}, {"checks", arr}}.dump(2) << '\n';
    } else if (fmt == "csv") {
        std::cout << "suite,name,passed,residual,tolerance\n";
        for (const auto& r : results) {
            std::cout << r.suite << ",\"" << r.name << "\"," << (r.passed ? 1 : 0) << ',' << r.residual << ','
                      << r.tolerance << '\n';
        }
    } else {
        for (const auto& r : results) {
            std::cout << (r.passed ? "PASS " : "FAIL ") << '[' << r.suite << "] " << r.name << "  residual="
                      << r.residual << " tol=" << r.tolerance;
            if (!r.detail.empty()) std::cout << "  (" << r.detail << ')';
            std::cout << '\n';
        }
        std::cout << (all_ok ? "all checks passed" : "some checks FAILED") << '\n';
    }
    return all_ok ? kOk : kCheckFailed;
}

// ---- asym -----------------------------------------------------------------

struct AsymArgs {
    int m = 1, k = 0;
    std::string omega = "1", alpha = "1", a = "0.5";
    std::string w_grid = "10,20,40,80,160";
    bool fit = false;
    bool strict = false;
};

int cmd_asym(const Config& cfg, const AsymArgs& args) {
    const PrecisionPolicy p = policy_of(cfg);
    const int bits = p.precision_bits;
    AsymExperiment e;
    e.omega = parse_omega(args.omega, bits, "omega");
    e.alpha = parse_omega(args.alpha, bits, "alpha");
    e.a = parse_complex(args.a, bits, "a");
    e.m = args.m;
    e.k = args.k;
    e.strict_statement = args.strict;
    e.w_grid.clear();
    for (const auto& g : split_list(args.w_grid)) {
        try {
            std::size_t used = 0;
            e.w_grid.push_back(std::stod(g, &used));
            if (used != g.size()) throw std::invalid_argument(g);
        } catch (const std::exception&) {
            throw InvalidParameter("cannot parse w grid value '" + g + "'", "w_grid");
        }
    }
    if (cfg.lambda) throw InvalidParameter("--lambda is not supported for asym", "lambda");

    const std::vector<AsymRow> rows = run_experiment(e, p);
    const int digits = decimal_digits(bits);
    auto s = [&](const BigReal& x) { return x.to_string(digits); };

    std::optional<FitResult> fit;
    std::optional<FitUnstable> unstable;
    if (args.fit) {
        try {
            fit = fit_one_over_w(e, rows, p);
        } catch (const FitUnstable& err) {
            unstable = err;
        }
    }

    const std::string fmt = cfg.format.empty() ? "csv" : cfg.format;
    if (fmt == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) {
            arr.push_back({{"w", r.w},
                           {"lhs", {{"re", s(r.lhs.real())}, {"im", s(r.lhs.imag())}}},
                           {"rhs", {{"re", s(r.rhs_sum.real())}, {"im", s(r.rhs_sum.imag())}}},
                           {"err_abs", s(abs(r.error))},
                           {"err_norm", r.normalized_error},
                           {"err_estimate", r.err_estimate}});
        }
        ordered_json out{{"rows", arr}};
        if (fit) {
            out["fit"] = {{"fitted", {{"re", s(fit->fitted.real())}, {"im", s(fit->fitted.imag())}}},
                          {"reference", {{"re", s(fit->reference.real())}, {"im", s(fit->reference.imag())}}},
                          {"relative_error", fit->relative_error},
                          {"relative_discrepancy", fit->relative_discrepancy}};
        }
        std::cout << out.dump(2) << '\n';
    } else {
        const char sep = fmt == "csv" ? ',' : ' ';
        std::cout << "w" << sep << "lhs_re" << sep << "lhs_im" << sep << "rhs_re" << sep << "rhs_im" << sep
                  << "err_abs" << sep << "err_norm\n";
        for (const auto& r : rows) {
            std::cout << r.w << sep << s(r.lhs.real()) << sep << s(r.lhs.imag()) << sep << s(r.rhs_sum.real()) << sep
                      << s(r.rhs_sum.imag()) << sep << abs(r.error).to_string(8) << sep << r.normalized_error
                      << '\n';
        }
        if (fit) {
            std::cout << '\n'
                      << "fit_re" << sep << "fit_im" << sep << "ref_re" << sep << "ref_im" << sep << "rel_err" << sep
                      << "discrepancy\n"
                      << s(fit->fitted.real()) << sep << s(fit->fitted.imag()) << sep << s(fit->reference.real())
                      << sep << s(fit->reference.imag()) << sep << fit->relative_error << sep
                      << fit->relative_discrepancy << '\n';
        }
    }
    std::cout.flush();
    if (unstable) throw *unstable;
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hypermultiple gamma functions, Barnes zeta and balanced functions"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    if (const char* env = std::getenv("HYPERZETA_PRECISION_BITS")) {
        try {
            std::size_t used = 0;
            cfg.precision_bits = std::stoi(env, &used);
            if (used != std::string(env).size()) throw std::invalid_argument(env);
        } catch (const std::exception&) {
            report_error("ParseError", std::string("HYPERZETA_PRECISION_BITS is not an integer: ") + env,
                         "HYPERZETA_PRECISION_BITS");
            return kUsage;
        }
    }
    app.add_option("--precision-bits", cfg.precision_bits, "working precision in bits (>= 64)");
    app.add_option("--tol", cfg.tol, "accuracy threshold for checks");
    app.add_option("--lambda", cfg.lambda, "Hankel circle radius override");
    app.add_option("--format", cfg.format, "json, csv or plain")->check(CLI::IsMember({"json", "csv", "plain"}));
    app.add_option("--seed", cfg.seed, "seed for randomized checks");

    EvalArgs ea;
    auto* eval = app.add_subcommand("eval", "evaluate zeta, P or gamma-log");
    eval->add_option("function", ea.function)->required()->check(CLI::IsMember({"zeta", "P", "gamma-log"}));
    eval->add_option("--s", ea.s, "zeta argument s");
    eval->add_option("--w", ea.w, "shift w (Re w > 0)");
    eval->add_option("--omega", ea.omega, "periods, comma separated");
    eval->add_option("--m", ea.m, "derivative order m");
    eval->add_option("--k", ea.k, "index k");

    std::string suite;
    auto* check = app.add_subcommand("check", "run invariant suites");
    check->add_option("suite", suite)
        ->required()
        ->check(CLI::IsMember({"combinatorics", "qpoly", "quadrature", "evaluators", "all"}));

    AsymArgs aa;
    auto* asym = app.add_subcommand("asym", "large-w expansion experiment");
    asym->add_option("--m", aa.m);
    asym->add_option("--k", aa.k);
    asym->add_option("--omega", aa.omega, "retained periods");
    asym->add_option("--alpha", aa.alpha, "absorbed periods");
    asym->add_option("--a", aa.a, "shift a");
    asym->add_option("--w-grid", aa.w_grid, "increasing w values, comma separated");
    asym->add_flag("--fit", aa.fit, "append the 1/w coefficient fit");
    asym->add_flag("--strict-statement", aa.strict, "evaluate the left side at w rather than w + a");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        report_error("ParseError", e.what(), "");
        return kUsage;
    }

    try {
        if (cfg.precision_bits < kMinPrecisionBits) {
            throw InvalidParameter("precision must be at least 64 bits", "precision_bits");
        }
        if (!(cfg.tol > 0)) throw InvalidParameter("tolerance must be positive", "tol");
        if (*eval) return cmd_eval(cfg, ea);
        if (*check) return cmd_check(cfg, suite);
        return cmd_asym(cfg, aa);
    } catch (const Error& e) {
        report_error(e.code(), e.what(), e.parameter());
        return exit_for(e.kind());
    } catch (const std::exception& e) {
        report_error("InternalError", e.what(), "");
        return kInternal;
    }
}
