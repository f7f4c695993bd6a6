#include "diffsum/verify.hpp"

#include <stdexcept>

#include "diffsum/engine.hpp"
#include "diffsum/reference.hpp"

namespace diffsum {

namespace {

CheckResult fail(std::string name, std::string detail) {
    return {std::move(name), false, std::move(detail)};
}

CheckResult pass(std::string name) {
    return {std::move(name), true, ""};
}

std::string family_name(Family family) {
    return family == Family::Coth ? "coth" : "tanh";
}

// V expansion induced by the coth table: 1 - z/2 + a_1 z^2/2 - a_2 z^4/8 + ...
PowerSeries same_sign_v_from_table(const std::vector<Rational>& a) {
    const int order = 2 * static_cast<int>(a.size()) + 1;
    std::vector<Rational> v(static_cast<size_t>(order));
    v[0] = Rational(1);
    v[1] = Rational(-1, 2);
    for (size_t k = 1; k <= a.size(); ++k) {
        const Rational sign(k % 2 == 1 ? 1 : -1);
        v[2 * k] = sign * a[k - 1] / Rational(2).pow(2 * static_cast<long>(k) - 1);
    }
    return PowerSeries(std::move(v));
}

// V expansion induced by the tanh table: 1/2 - c_0 z/4 + c_1 z^3/16 - ...
PowerSeries alternating_v_from_table(const std::vector<Rational>& c) {
    const int order = 2 * static_cast<int>(c.size());
    std::vector<Rational> v(static_cast<size_t>(order));
    v[0] = Rational(1, 2);
    for (size_t k = 0; k < c.size(); ++k) {
        const Rational sign(k % 2 == 0 ? -1 : 1);
        v[2 * k + 1] = sign * c[k] / Rational(4).pow(static_cast<long>(k) + 1);
    }
    return PowerSeries(std::move(v));
}

}  // namespace

bool VerificationReport::all_passed() const {
    for (const CheckResult& c : checks) {
        if (!c.passed) {
            return false;
        }
    }
    return true;
}

const CheckResult* VerificationReport::first_failure() const {
    for (const CheckResult& c : checks) {
        if (!c.passed) {
            return &c;
        }
    }
    return nullptr;
}

CheckResult check_seed_values(Family family, const std::vector<Rational>& values) {
    const std::string name = family_name(family) + " seed values";
    const std::vector<Rational> expected =
        family == Family::Coth
            ? std::vector<Rational>{{1, 6}, {1, 90}, {1, 945}, {1, 9450}, {1, 93555}}
            : std::vector<Rational>{{1, 1}, {1, 3}, {2, 15}, {17, 315}, {62, 2835}};
    const size_t n = std::min(values.size(), expected.size());
    if (n == 0) {
        return fail(name, "empty table");
    }
    for (size_t i = 0; i < n; ++i) {
        if (values[i] != expected[i]) {
            return fail(name, "entry " + std::to_string(i) + ": expected " + expected[i].str() +
                                  ", got " + values[i].str());
        }
    }
    return pass(name);
}

CheckResult check_recurrence_matches_series(Family family, const std::vector<Rational>& values) {
    const std::string name = family_name(family) + " recurrence matches series expansion";
    if (values.empty()) {
        return fail(name, "empty table");
    }
    if (family == Family::Coth) {
        // t*coth(t) carries 2(-1)^{k+1} a_k at degree 2k
        const int count = static_cast<int>(values.size());
        const PowerSeries w = ratio_even_odd(2 * count + 2, RatioKind::CothLike);
        for (int k = 1; k <= count; ++k) {
            const Rational sign(k % 2 == 1 ? 2 : -2);
            const Rational expected = sign * values[static_cast<size_t>(k - 1)];
            if (w[2 * k] != expected) {
                return fail(name, "degree " + std::to_string(2 * k) + ": series has " +
                                      w[2 * k].str() + ", table implies " + expected.str());
            }
        }
        return pass(name);
    }
    // tanh(t) carries (-1)^k c_k at degree 2k+1
    const int top = static_cast<int>(values.size()) - 1;
    const PowerSeries u = ratio_even_odd(2 * top + 3, RatioKind::TanhLike);
    for (int k = 0; k <= top; ++k) {
        const Rational sign(k % 2 == 0 ? 1 : -1);
        const Rational expected = sign * values[static_cast<size_t>(k)];
        if (u[2 * k + 1] != expected) {
            return fail(name, "degree " + std::to_string(2 * k + 1) + ": series has " +
                                  u[2 * k + 1].str() + ", table implies " + expected.str());
        }
    }
    return pass(name);
}

CheckResult check_generating_identity(Family family, const std::vector<Rational>& values) {
    if (values.empty()) {
        return fail(family_name(family) + " generating identity", "empty table");
    }
    if (family == Family::Coth) {
        const std::string name = "same-sign generating identity V(e^z-1)/z = 1";
        const PowerSeries v = same_sign_v_from_table(values);
        const int order = v.order();
        const PowerSeries expm1_over_z =
            (PowerSeries::exp_z(order + 1) - PowerSeries::constant(Rational(1), order + 1))
                .shift_down(1);
        const PowerSeries product = v * expm1_over_z;
        if (product != PowerSeries::constant(Rational(1), order)) {
            return fail(name, "product is not the constant series 1: " + product.debug_json());
        }
        return pass(name);
    }
    const std::string name = "alternating generating identity V(1+e^z) = 1";
    const PowerSeries v = alternating_v_from_table(values);
    const int order = v.order();
    const PowerSeries one_plus_exp =
        PowerSeries::constant(Rational(1), order) + PowerSeries::exp_z(order);
    const PowerSeries product = v * one_plus_exp;
    if (product != PowerSeries::constant(Rational(1), order)) {
        return fail(name, "product is not the constant series 1: " + product.debug_json());
    }
    return pass(name);
}

CheckResult check_ode_residual(RatioKind kind, int through_degree) {
    if (through_degree < 0) {
        throw std::invalid_argument("through_degree must be >= 0");
    }
    if (kind == RatioKind::TanhLike) {
        const std::string name = "ode residual u' + u^2 - 1 = 0 (tanh expansion)";
        const int order = through_degree + 2;
        const PowerSeries u = ratio_even_odd(order, RatioKind::TanhLike);
        const PowerSeries residual =
            u.derivative() + u * u - PowerSeries::constant(Rational(1), order);
        if (!residual.is_zero_through(through_degree)) {
            return fail(name, "nonzero residual coefficient at or below degree " +
                                  std::to_string(through_degree));
        }
        return pass(name);
    }
    // With w = t*u the residual relation scales to t w' - w + w^2 - t^2 = 0,
    // which stays inside plain power series; residual zero through degree d
    // corresponds to the scaled relation zero through degree d + 2.
    const std::string name = "ode residual u' + u^2 - 1 = 0 (coth expansion)";
    const int order = through_degree + 3;
    const PowerSeries w = ratio_even_odd(order, RatioKind::CothLike);
    const PowerSeries scaled = w.derivative().shift_up(1) - w + w * w -
                               PowerSeries::monomial(Rational(1), 2, order);
    if (!scaled.is_zero_through(through_degree + 2)) {
        return fail(name, "nonzero residual coefficient at or below degree " +
                              std::to_string(through_degree));
    }
    return pass(name);
}

CheckResult check_weight_ratio(const EngineWeights& weights) {
    const std::string name = "weight ratio f_k/e_k = 2^{2k}-1 and sign pattern";
    for (int k = 1; k <= weights.max_order; ++k) {
        const int expected_sign = k % 2 == 0 ? 1 : -1;
        if (weights.e(k).sign() != expected_sign || weights.f(k).sign() != expected_sign) {
            return fail(name, "sign of order-" + std::to_string(k) + " weight is wrong");
        }
        const Rational expected = Rational(2).pow(2 * k) - Rational(1);
        const Rational ratio = weights.f(k) / weights.e(k);
        if (ratio != expected) {
            return fail(name, "k=" + std::to_string(k) + ": expected " + expected.str() +
                                  ", got " + ratio.str());
        }
    }
    return pass(name);
}

CheckResult check_series_parity(int order) {
    const std::string name = "series parity (coth even, tanh odd)";
    const PowerSeries w = ratio_even_odd(order, RatioKind::CothLike);
    const PowerSeries u = ratio_even_odd(order, RatioKind::TanhLike);
    for (int k = 0; k < order; ++k) {
        if (k % 2 == 1 && !w[k].is_zero()) {
            return fail(name, "coth-like series has an odd-degree term at " + std::to_string(k));
        }
        if (k % 2 == 0 && !u[k].is_zero()) {
            return fail(name, "tanh-like series has an even-degree term at " + std::to_string(k));
        }
    }
    return pass(name);
}

CheckResult check_positivity(Family family, const std::vector<Rational>& values) {
    const std::string name = family_name(family) + " positivity" +
                             (family == Family::Coth ? " and strict decrease" : "");
    for (size_t i = 0; i < values.size(); ++i) {
        if (values[i].sign() <= 0) {
            return fail(name, "entry " + std::to_string(i) + " is not positive");
        }
        if (family == Family::Coth && i > 0 && values[i] >= values[i - 1]) {
            return fail(name, "entry " + std::to_string(i) + " does not decrease");
        }
    }
    return pass(name);
}

CheckResult check_zeta_numeric(int k) {
    const std::string name = "zeta(" + std::to_string(2 * k) + ") = a_" + std::to_string(k) +
                             " pi^" + std::to_string(2 * k);
    const ReferenceConstant pi = compute_pi(25);
    const ReferenceConstant pi_power = pow_with_error(pi, 2 * k);
    const SeriesSumResult zeta = zeta_sum(2 * k, 10, std::nullopt);
    const Rational a_k = zeta_relation(k);
    const Rational difference = (a_k * pi_power.value - zeta.value).abs();
    const Rational allowance = a_k * pi_power.error_bound + zeta.tail.error_estimate;
    if (difference > allowance) {
        return fail(name, "difference " + difference.to_decimal(30) + " exceeds bound " +
                              allowance.to_decimal(30));
    }
    return pass(name);
}

VerificationReport run_verification(int depth) {
    if (depth < 1) {
        throw std::invalid_argument("run_verification requires depth >= 1");
    }
    const std::vector<Rational> a = coefficient_cache().coth_prefix(depth);
    const std::vector<Rational> c = coefficient_cache().tanh_prefix(depth);
    const EngineWeights weights = engine_weights(depth);

    VerificationReport report;
    report.checks.push_back(check_seed_values(Family::Coth, a));
    report.checks.push_back(check_seed_values(Family::Tanh, c));
    report.checks.push_back(check_recurrence_matches_series(Family::Coth, a));
    report.checks.push_back(check_recurrence_matches_series(Family::Tanh, c));
    report.checks.push_back(check_generating_identity(Family::Coth, a));
    report.checks.push_back(check_generating_identity(Family::Tanh, c));
    report.checks.push_back(check_ode_residual(RatioKind::CothLike, 2 * depth));
    report.checks.push_back(check_ode_residual(RatioKind::TanhLike, 2 * depth));
    report.checks.push_back(check_weight_ratio(weights));
    report.checks.push_back(check_series_parity(2 * depth + 2));
    report.checks.push_back(check_positivity(Family::Coth, a));
    report.checks.push_back(check_positivity(Family::Tanh, c));
    for (int k = 1; k <= std::min(3, depth); ++k) {
        report.checks.push_back(check_zeta_numeric(k));
    }
    return report;
}

}  // namespace diffsum
