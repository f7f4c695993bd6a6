#pragma once

#include <string>
#include <vector>

#include "diffsum/coefficients.hpp"
#include "diffsum/power_series.hpp"

namespace diffsum {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;  // filled in on failure
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    const CheckResult* first_failure() const;  // nullptr when clean
};

// Cross-check battery tying the recurrences, the generating functions, the
// differential equation, and the weight-ratio identity together, plus the
// numeric zeta relations. depth bounds the coefficient index everywhere.
VerificationReport run_verification(int depth);

// The individual checks take the coefficient values as data so callers
// (tests in particular) can feed them tampered tables. Vectors are in the
// family's native layout: coth a_1.. at [k-1], tanh c_0.. at [k].
CheckResult check_seed_values(Family family, const std::vector<Rational>& values);
CheckResult check_recurrence_matches_series(Family family, const std::vector<Rational>& values);
CheckResult check_generating_identity(Family family, const std::vector<Rational>& values);
CheckResult check_ode_residual(RatioKind kind, int through_degree);
CheckResult check_weight_ratio(const EngineWeights& weights);
CheckResult check_series_parity(int order);
CheckResult check_positivity(Family family, const std::vector<Rational>& values);
CheckResult check_zeta_numeric(int k);

}  // namespace diffsum
