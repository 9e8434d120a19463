#include <doctest.h>

#include "hyperzeta/asymptotics.hpp"
#include "hyperzeta/errors.hpp"
#include "oracle_util.hpp"

using namespace hyperzeta;

namespace {
const PrecisionPolicy kP;
constexpr int kBits = kDefaultPrecisionBits;
}  // namespace

TEST_CASE("experiment validation") {
    AsymExperiment e = AsymExperiment::default_experiment(kBits);
    CHECK_NOTHROW(e.validate());
    e.w_grid = {10, 20, 15, 40};
    CHECK_THROWS_AS(e.validate(), InvalidParameter);
    e.w_grid = {10, 20, 40};
    CHECK_THROWS_AS(e.validate(), InvalidParameter);
    e = AsymExperiment::default_experiment(kBits);
    e.a = BigComplex(0L, kBits);
    CHECK_THROWS_AS(e.validate(), InvalidParameter);
    e.alpha = OmegaVector();
    CHECK_NOTHROW(e.validate());
}

TEST_CASE("no absorbed periods and a = 0 is an identity") {
    AsymExperiment e = AsymExperiment::default_experiment(kBits);
    e.alpha = OmegaVector();
    e.a = BigComplex(0L, kBits);
    e.omega = OmegaVector::from_doubles({1.0, 1.5}, kBits);
    e.m = 2;
    e.k = 1;
    e.w_grid = {3, 6, 12, 24};
    for (const AsymRow& r : run_experiment(e, kP)) CHECK(abs(r.error).to_double() < 1e-28 * (1 + abs(r.lhs).to_double()));
}

TEST_CASE("right side is symmetric in the absorbed periods") {
    AsymExperiment e = AsymExperiment::default_experiment(kBits);
    e.alpha = OmegaVector::from_doubles({1.0, 2.0}, kBits);
    AsymExperiment f = e;
    f.alpha = OmegaVector::from_doubles({2.0, 1.0}, kBits);
    const BigReal w(15L, kBits);
    CHECK(oracle::rel_err(rhs_expansion(e, w, kP).value, rhs_expansion(f, w, kP).value) < 1e-40);
}

TEST_CASE("default experiment rows") {
    const AsymExperiment e = AsymExperiment::default_experiment(kBits);
    const auto rows = run_experiment(e, kP);
    REQUIRE(rows.size() == 5);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].w > rows[i - 1].w);
        CHECK(abs(rows[i].error) < abs(rows[i - 1].error));
    }
    AsymExperiment strict = e;
    strict.strict_statement = true;
    const auto srows = run_experiment(strict, kP);
    CHECK(abs(srows.back().error) > abs(srows.front().error));
}

TEST_CASE("1/w coefficient fit") {
    AsymExperiment e = AsymExperiment::default_experiment(kBits);
    e.a = BigComplex(0.25, 0.0, kBits);
    e.w_grid = {25, 50, 100, 200};
    const FitResult fit = fit_one_over_w(e, kP);
    CHECK(oracle::rel_err(fit.reference, BigComplex(-1.0 / 128, 0.0, kBits)) < 1e-50);
    CHECK(fit.relative_error < 0.05);
    e.m = 2;
    CHECK_THROWS_AS(fit_one_over_w(e, kP), InvalidParameter);
}

TEST_CASE("vanishing 1/w coefficient makes the fit unstable") {
    AsymExperiment e = AsymExperiment::default_experiment(kBits);
    e.w_grid = {25, 50, 100, 200};
    CHECK_THROWS_AS(fit_one_over_w(e, kP), FitUnstable);
}

TEST_CASE("remainder reduction") {
    const AsymExperiment e = AsymExperiment::default_experiment(kBits);
    const ReductionCheck r0 = remainder_reduction_check(e, BigReal(10L, kBits), 0, kP);
    CHECK(r0.rays.is_zero());
    CHECK(abs(r0.contour).to_double() <= r0.err_estimate + 1e-40);
    for (int nu = 1; nu <= 3; ++nu) {
        const ReductionCheck r = remainder_reduction_check(e, BigReal(10L, kBits), nu, kP);
        CHECK(abs(r.contour - r.rays).to_double() <= r.err_estimate);
        CHECK(abs(r.contour).to_double() > 1e-6);
    }
    CHECK_THROWS_AS(remainder_reduction_check(e, BigReal(10L, kBits), -1, kP), InvalidParameter);
}
