#include <doctest.h>

#include <thread>
#include <vector>

#include "diffsum/coefficients.hpp"
#include "diffsum/power_series.hpp"
#include "oracles.hpp"

using diffsum::CoefficientTable;
using diffsum::Family;
using diffsum::PowerSeries;
using diffsum::Rational;
using diffsum::RatioKind;

TEST_CASE("coth family first entries") {
    const CoefficientTable t = diffsum::coth_coefficients(5);
    CHECK(t.at(1) == Rational(1, 6));
    CHECK(t.at(2) == Rational(1, 90));
    CHECK(t.at(3) == Rational(1, 945));
    CHECK(t.at(4) == Rational(1, 9450));
    CHECK(t.at(5) == Rational(1, 93555));

    CHECK(diffsum::coth_coefficients(1).at(1) == Rational(1, 6));
    CHECK_THROWS_AS(diffsum::coth_coefficients(0), std::invalid_argument);
    CHECK_THROWS_AS(t.at(6), std::out_of_range);
}

TEST_CASE("tanh family first entries") {
    const CoefficientTable t = diffsum::tanh_coefficients(4);
    CHECK(t.at(0) == Rational(1));
    CHECK(t.at(1) == Rational(1, 3));
    CHECK(t.at(2) == Rational(2, 15));
    CHECK(t.at(3) == Rational(17, 315));
    CHECK(t.at(4) == Rational(62, 2835));
    CHECK_THROWS_AS(t.at(-1), std::out_of_range);
}

TEST_CASE("sixth coth entry against the series oracle") {
    // t*coth(t) carries 2(-1)^{k+1} a_k at degree 2k; k = 6 has sign -1
    const PowerSeries w = diffsum::ratio_even_odd(14, RatioKind::CothLike);
    const Rational a6 = diffsum::coth_coefficients(6).at(6);
    CHECK(a6 == w[12] / Rational(-2));
}

TEST_CASE("fifth tanh entry against the series oracle") {
    const PowerSeries u = diffsum::ratio_even_odd(13, RatioKind::TanhLike);
    const Rational c5 = diffsum::tanh_coefficients(5).at(5);
    CHECK(c5 == -u[11]);
}

TEST_CASE("recurrence equals series expansion through k = 20") {
    const CoefficientTable a = diffsum::coth_coefficients(20);
    const PowerSeries w = diffsum::ratio_even_odd(42, RatioKind::CothLike);
    for (int k = 1; k <= 20; ++k) {
        const Rational sign(k % 2 == 1 ? 2 : -2);
        CHECK(w[2 * k] == sign * a.at(k));
    }

    const CoefficientTable c = diffsum::tanh_coefficients(20);
    const PowerSeries u = diffsum::ratio_even_odd(43, RatioKind::TanhLike);
    for (int k = 0; k <= 20; ++k) {
        const Rational sign(k % 2 == 0 ? 1 : -1);
        CHECK(u[2 * k + 1] == sign * c.at(k));
    }
}

TEST_CASE("coth family equals the bernoulli route exactly") {
    const int depth = 25;
    const CoefficientTable a = diffsum::coth_coefficients(depth);
    const auto bernoulli = oracles::bernoulli_numbers(2 * depth);
    for (int k = 1; k <= depth; ++k) {
        CHECK(a.at(k) == oracles::coth_coefficient_from_bernoulli(bernoulli, k));
    }
}

TEST_CASE("engine weight values") {
    const diffsum::EngineWeights w = diffsum::engine_weights(3);
    CHECK(w.e(1) == Rational(-1, 12));
    CHECK(w.e(2) == Rational(1, 720));
    CHECK(w.e(3) == Rational(-1, 30240));
    CHECK(w.f(1) == Rational(-1, 4));
    CHECK(w.f(2) == Rational(1, 48));
    CHECK(w.f(3) == Rational(-1, 480));
    CHECK_THROWS_AS(diffsum::engine_weights(0), std::invalid_argument);
}

TEST_CASE("weight signs alternate and the families stay positive") {
    const int depth = 20;
    const diffsum::EngineWeights w = diffsum::engine_weights(depth);
    for (int k = 1; k <= depth; ++k) {
        const int expected = k % 2 == 0 ? 1 : -1;
        CHECK(w.e(k).sign() == expected);
        CHECK(w.f(k).sign() == expected);
    }

    const CoefficientTable a = diffsum::coth_coefficients(34);
    for (int k = 1; k <= 34; ++k) {
        CHECK(a.at(k).sign() == 1);
        if (k > 1) {
            CHECK(a.at(k) < a.at(k - 1));  // strict decrease
        }
    }
    const CoefficientTable c = diffsum::tanh_coefficients(34);
    for (int k = 0; k <= 34; ++k) {
        CHECK(c.at(k).sign() == 1);
    }
}

TEST_CASE("weight ratio identity f_k/e_k = 2^{2k} - 1") {
    CHECK(diffsum::ratio_identity_check(1) == Rational(3));
    CHECK(diffsum::ratio_identity_check(2) == Rational(15));
    CHECK(diffsum::ratio_identity_check(5) == Rational(1023));

    const diffsum::EngineWeights w = diffsum::engine_weights(20);
    for (int k = 1; k <= 20; ++k) {
        CHECK(w.f(k) == (Rational(2).pow(2 * k) - Rational(1)) * w.e(k));
    }
}

TEST_CASE("zeta relation values") {
    CHECK(diffsum::zeta_relation(1) == Rational(1, 6));    // zeta(2) = pi^2/6
    CHECK(diffsum::zeta_relation(2) == Rational(1, 90));   // zeta(4) = pi^4/90
    CHECK(diffsum::zeta_relation(3) == Rational(1, 945));  // zeta(6) = pi^6/945
}

TEST_CASE("extension keeps existing entries") {
    CoefficientTable t = diffsum::coth_coefficients(10);
    const std::vector<Rational> before = t.values();
    t.extend(20);
    CHECK(t.max_index() == 20);
    for (size_t i = 0; i < before.size(); ++i) {
        CHECK(t.values()[i] == before[i]);
    }
    t.extend(5);  // shrinking request is a no-op
    CHECK(t.max_index() == 20);

    const CoefficientTable fresh = diffsum::coth_coefficients(20);
    CHECK(fresh.values() == t.values());
}

TEST_CASE("shared cache serves consistent prefixes concurrently") {
    const std::vector<Rational> expected_a = diffsum::coth_coefficients(40).values();
    const std::vector<Rational> expected_c = diffsum::tanh_coefficients(40).values();

    std::vector<std::thread> workers;
    std::vector<char> results(8, 0);  // one byte per worker, no bit packing
    for (int i = 0; i < 8; ++i) {
        workers.emplace_back([&, i] {
            const auto a = diffsum::coefficient_cache().coth_prefix(40);
            const auto c = diffsum::coefficient_cache().tanh_prefix(40);
            results[static_cast<size_t>(i)] = a == expected_a && c == expected_c;
        });
    }
    for (auto& w : workers) {
        w.join();
    }
    for (int i = 0; i < 8; ++i) {
        CHECK(results[static_cast<size_t>(i)]);
    }
}
