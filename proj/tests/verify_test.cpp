#include <doctest.h>

#include "diffsum/coefficients.hpp"
#include "diffsum/verify.hpp"

using diffsum::Family;
using diffsum::Rational;

TEST_CASE("the full battery passes") {
    for (int depth : {1, 10}) {
        const diffsum::VerificationReport report = diffsum::run_verification(depth);
        CHECK(report.all_passed());
        CHECK(report.first_failure() == nullptr);
        CHECK(report.checks.size() >= 12);
        for (const auto& check : report.checks) {
            CHECK_FALSE(check.name.empty());
        }
    }
    CHECK_THROWS_AS(diffsum::run_verification(0), std::invalid_argument);
}

TEST_CASE("tampered coth tables are caught") {
    std::vector<Rational> a = diffsum::coth_coefficients(8).values();
    a[2] = Rational(1, 944);  // instead of 1/945

    CHECK_FALSE(diffsum::check_seed_values(Family::Coth, a).passed);
    CHECK_FALSE(diffsum::check_recurrence_matches_series(Family::Coth, a).passed);
    CHECK_FALSE(diffsum::check_generating_identity(Family::Coth, a).passed);
    CHECK_FALSE(diffsum::check_seed_values(Family::Coth, {}).passed);

    const auto result = diffsum::check_recurrence_matches_series(Family::Coth, a);
    CHECK_FALSE(result.detail.empty());  // names the mismatching degree
}

TEST_CASE("tampered tanh tables are caught") {
    std::vector<Rational> c = diffsum::tanh_coefficients(6).values();
    c[2] = -c[2];

    CHECK_FALSE(diffsum::check_seed_values(Family::Tanh, c).passed);
    CHECK_FALSE(diffsum::check_recurrence_matches_series(Family::Tanh, c).passed);
    CHECK_FALSE(diffsum::check_generating_identity(Family::Tanh, c).passed);
    CHECK_FALSE(diffsum::check_positivity(Family::Tanh, c).passed);
}

TEST_CASE("tampered weights are caught") {
    diffsum::EngineWeights w = diffsum::engine_weights(6);
    CHECK(diffsum::check_weight_ratio(w).passed);
    w.alternating[3] = -w.alternating[3];
    CHECK_FALSE(diffsum::check_weight_ratio(w).passed);
}

TEST_CASE("non-decreasing coth values are caught") {
    std::vector<Rational> a = diffsum::coth_coefficients(6).values();
    CHECK(diffsum::check_positivity(Family::Coth, a).passed);
    a[4] = a[3] + Rational(1, 100);
    CHECK_FALSE(diffsum::check_positivity(Family::Coth, a).passed);
}

TEST_CASE("untampered pieces pass individually") {
    const auto a = diffsum::coth_coefficients(12).values();
    const auto c = diffsum::tanh_coefficients(12).values();
    CHECK(diffsum::check_seed_values(Family::Coth, a).passed);
    CHECK(diffsum::check_seed_values(Family::Tanh, c).passed);
    CHECK(diffsum::check_recurrence_matches_series(Family::Coth, a).passed);
    CHECK(diffsum::check_recurrence_matches_series(Family::Tanh, c).passed);
    CHECK(diffsum::check_generating_identity(Family::Coth, a).passed);
    CHECK(diffsum::check_generating_identity(Family::Tanh, c).passed);
    CHECK(diffsum::check_ode_residual(diffsum::RatioKind::CothLike, 24).passed);
    CHECK(diffsum::check_ode_residual(diffsum::RatioKind::TanhLike, 24).passed);
    CHECK(diffsum::check_series_parity(26).passed);
    CHECK(diffsum::check_zeta_numeric(1).passed);
}
