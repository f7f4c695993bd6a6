#include "diffsum/engine.hpp"

#include <stdexcept>
#include <utility>

#include "diffsum/coefficients.hpp"
#include "diffsum/errors.hpp"

namespace diffsum {

namespace {

std::string derivative_label(int k) {
    return "X^(" + std::to_string(2 * k - 1) + ")";
}

}  // namespace

TailSumResult tail_sum(const TailSumRequest& request) {
    if (request.term == nullptr) {
        throw std::invalid_argument("tail_sum needs a term");
    }
    if (request.start < 1) {
        throw std::invalid_argument("tail_sum requires start >= 1");
    }
    if (request.order_cap < 1) {
        throw std::invalid_argument("tail_sum requires order_cap >= 1");
    }
    if (request.order && *request.order < 1) {
        throw std::invalid_argument("explicit truncation order must be >= 1");
    }
    const TermFamily& term = *request.term;
    if (request.kind == SeriesKind::SameSign && !term.supports_same_sign()) {
        throw DivergenceError("term does not support same-sign summation: " + term.name());
    }

    // Contributions of non-exact providers land on the working-precision
    // grid so their rationals stay bounded as terms accumulate.
    const bool exact = term.exact();
    const auto eval = [&](const Rational& raw) {
        return exact ? raw : raw.rounded(request.working_digits);
    };

    // Derivative terms through the horizon; one extra term backs the error
    // estimate (and, under AUTO, the stopping rule).
    const int horizon = (request.order ? *request.order : request.order_cap) + 1;
    const EngineWeights weights = engine_weights(horizon);
    const std::vector<Rational>& w =
        request.kind == SeriesKind::SameSign ? weights.same_sign : weights.alternating;

    std::vector<Rational> terms;  // term for order k at [k-1]
    terms.reserve(static_cast<size_t>(horizon));
    for (int k = 1; k <= horizon; ++k) {
        terms.push_back(eval(w[static_cast<size_t>(k - 1)] * term.derivative(2 * k - 1, request.start)));
    }

    TailSumResult result;
    if (request.order) {
        result.order_used = *request.order;
    } else {
        // Truncate where the next term is smallest in magnitude: the series
        // is asymptotic, so the terms shrink and then grow again. Running
        // into the cap while they still shrink is reported as capped.
        int best = 1;
        for (int k = 2; k <= horizon; ++k) {
            if (terms[static_cast<size_t>(k - 1)].abs() < terms[static_cast<size_t>(best - 1)].abs()) {
                best = k;
            }
        }
        result.order_used = best - 1;
        if (best == horizon) {
            result.order_used = request.order_cap;
            result.order_capped = true;
        }
    }
    result.error_estimate = terms[static_cast<size_t>(result.order_used)].abs();

    if (request.kind == SeriesKind::SameSign) {
        const std::optional<Rational> integral = term.tail_integral(request.start);
        if (!integral) {
            throw std::logic_error("term claims same-sign support but has no tail integral");
        }
        result.contributions.push_back({"integral", eval(*integral)});
    }
    result.contributions.push_back({"X/2", eval(term.value(request.start) / Rational(2))});
    for (int k = 1; k <= result.order_used; ++k) {
        result.contributions.push_back({derivative_label(k), terms[static_cast<size_t>(k - 1)]});
    }

    for (const Contribution& c : result.contributions) {
        result.value += c.value;
    }
    return result;
}

SeriesSumResult sum_series_detailed(const TermFamily& term, std::int64_t split, SeriesKind kind,
                                    std::optional<int> order, int order_cap, int working_digits) {
    TailSumRequest request;
    request.term = &term;
    request.start = split;
    request.kind = kind;
    request.order = order;
    request.order_cap = order_cap;
    request.working_digits = working_digits;

    SeriesSumResult result;
    result.tail = tail_sum(request);
    result.head = head_sum(term, split, kind == SeriesKind::Alternating);
    // The full alternating series assigns the term at 1-indexed position x
    // the sign (-1)^{x+1}; the tail formula starts from +X(x).
    result.tail_sign = (kind == SeriesKind::Alternating && split % 2 == 0) ? -1 : 1;
    result.value = result.head + Rational(result.tail_sign) * result.tail.value;
    return result;
}

Rational sum_series(const TermFamily& term, std::int64_t split, SeriesKind kind,
                    std::optional<int> order, int order_cap, int working_digits) {
    return sum_series_detailed(term, split, kind, order, order_cap, working_digits).value;
}

SeriesSumResult zeta_sum(int n, std::int64_t split, std::optional<int> order, int order_cap) {
    if (n == 1) {
        throw DivergenceError("zeta(1) is the harmonic series and diverges");
    }
    if (n < 1) {
        throw std::invalid_argument("zeta_sum requires n >= 2");
    }
    const PowerTerm term(n);
    return sum_series_detailed(term, split, SeriesKind::SameSign, order, order_cap);
}

Rational zeta_approx(int n, std::int64_t split, std::optional<int> order, int order_cap) {
    return zeta_sum(n, split, order, order_cap).value;
}

SeriesSumResult eta_sum(int n, std::int64_t split, std::optional<int> order, int order_cap) {
    if (n < 1) {
        throw std::invalid_argument("eta_sum requires n >= 1");
    }
    const PowerTerm term(n);
    return sum_series_detailed(term, split, SeriesKind::Alternating, order, order_cap);
}

Rational eta_approx(int n, std::int64_t split, std::optional<int> order, int order_cap) {
    return eta_sum(n, split, order, order_cap).value;
}

}  // namespace diffsum
