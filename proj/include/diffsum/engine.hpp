#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diffsum/rational.hpp"
#include "diffsum/term_family.hpp"

namespace diffsum {

enum class SeriesKind { SameSign, Alternating };

// Everything tail_sum needs. `order` empty means AUTO: truncate where the
// magnitude of the next derivative term is smallest, never past order_cap.
struct TailSumRequest {
    const TermFamily* term = nullptr;
    std::int64_t start = 10;
    SeriesKind kind = SeriesKind::SameSign;
    std::optional<int> order;  // explicit K >= 1, or empty for AUTO
    int order_cap = 16;
    int working_digits = 30;  // quantization grid for non-exact terms
};

struct Contribution {
    std::string label;
    Rational value;
};

// Accelerated tail value with its term-by-term breakdown. `value` is exactly
// the sum of `contributions`; `error_estimate` is the magnitude of the first
// omitted derivative term. `order_capped` reports an AUTO search that ran
// into order_cap while the terms were still shrinking (best-effort result).
struct TailSumResult {
    Rational value;
    std::vector<Contribution> contributions;
    Rational error_estimate;
    int order_used = 0;
    bool order_capped = false;
};

// Sum of X(start) + X(start+1) + ... (same-sign) or
// X(start) - X(start+1) + ... (alternating), by the tail formulas
//
//   same-sign:   integral + X/2 + sum_k e_k X^(2k-1)
//   alternating:            X/2 + sum_k f_k X^(2k-1)
//
// evaluated at x = start. Same-sign requests need term->supports_same_sign();
// otherwise a DivergenceError is raised.
TailSumResult tail_sum(const TailSumRequest& request);

// Full series value assembled from an explicit head and an accelerated tail.
struct SeriesSumResult {
    Rational value;  // head + tail_sign * tail.value
    Rational head;
    int tail_sign = 1;  // sign the full series gives the term at the split index
    TailSumResult tail;
};

SeriesSumResult sum_series_detailed(const TermFamily& term, std::int64_t split, SeriesKind kind,
                                    std::optional<int> order, int order_cap = 16,
                                    int working_digits = 30);

Rational sum_series(const TermFamily& term, std::int64_t split, SeriesKind kind,
                    std::optional<int> order, int order_cap = 16, int working_digits = 30);

// zeta(n) = sum 1/k^n via the same-sign formula (n >= 2; n = 1 diverges).
SeriesSumResult zeta_sum(int n, std::int64_t split, std::optional<int> order, int order_cap = 16);
Rational zeta_approx(int n, std::int64_t split, std::optional<int> order, int order_cap = 16);

// eta(n) = sum (-1)^{k+1}/k^n via the alternating formula (n >= 1).
SeriesSumResult eta_sum(int n, std::int64_t split, std::optional<int> order, int order_cap = 16);
Rational eta_approx(int n, std::int64_t split, std::optional<int> order, int order_cap = 16);

}  // namespace diffsum
