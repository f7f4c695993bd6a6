#pragma once

#include <cstdint>
#include <string>

#include "diffsum/coefficients.hpp"
#include "diffsum/engine.hpp"
#include "diffsum/verify.hpp"

namespace diffsum {

enum class OutputFormat { Table, Json, Csv };

// Coefficient rows k = 1 .. max_index: {k, family, numerator, denominator,
// decimal(digits)}. CSV and JSON are byte-stable: fixed key order, '.'
// decimal separator, fractions as exact integer strings.
std::string render_coefficient_rows(const CoefficientTable& table, int digits,
                                    OutputFormat format);

// Weight rows k = 1 .. max_order: e_k, f_k and the exact ratio f_k/e_k.
std::string render_weight_rows(const EngineWeights& weights, OutputFormat format);

struct SumDescription {
    std::string series;  // "zeta", "eta" or "sum"
    int exponent = 0;
    std::int64_t split = 10;
    bool alternating = false;
    bool exact = true;
};

std::string render_sum_result(const SumDescription& description, const SeriesSumResult& result,
                              int digits, OutputFormat format);

// One line per identity plus a summary; byte-stable.
std::string render_verification_report(const VerificationReport& report, int depth);

}  // namespace diffsum
