#pragma once

// Invariant suites run by `hyperzeta check`.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperzeta/bignum.hpp"

namespace hyperzeta {

struct CheckConfig {
    PrecisionPolicy policy;
    double tol = 1e-20;  // threshold for floating-point identities
    std::uint64_t seed = 0;
    std::optional<double> lambda;  // circle radius override for contour checks
};

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    double residual = 0;  // largest residual seen (0 for exact checks)
    double tolerance = 0;
    std::string detail;
};

/// combinatorics, qpoly, quadrature, evaluators.
const std::vector<std::string>& check_suites();

/// Runs one suite or "all". Throws InvalidParameter for an unknown suite name.
/// Deterministic for a fixed config.
std::vector<CheckResult> run_checks(const std::string& suite, const CheckConfig& cfg);

}  // namespace hyperzeta
