#pragma once

#include <cstdint>
#include <string>

#include "diffsum/rational.hpp"
#include "diffsum/term_family.hpp"

namespace diffsum {

// A computed reference value with a proven enclosure: |value - true| is at
// most error_bound. Used only to verify the summation engine; nothing here
// is embedded as a literal constant.
struct ReferenceConstant {
    std::string name;
    Rational value;
    Rational error_bound;
};

// pi by Machin's formula 16 atan(1/5) - 4 atan(1/239), in exact rationals.
// error_bound <= 10^-(digits+2) (alternating-series tail bound).
ReferenceConstant compute_pi(int digits);

// ln 2 = sum 1/(k 2^k), geometric tail bound, error_bound <= 10^-(digits+2).
ReferenceConstant compute_ln2(int digits);

// value^exponent with the error bound propagated (|base - true| <= bound).
ReferenceConstant pow_with_error(const ReferenceConstant& base, int exponent);

// Literal finite sum X(x_start) +- X(x_start+1) + ... over `terms` terms.
Rational naive_partial_sum(const TermFamily& term, std::int64_t x_start, std::int64_t terms,
                           bool alternating);

// Strict enclosure of the true same-sign tail sum_{k >= x_start} X(k) for a
// decreasing positive term: the naive partial sum below, plus the integral
// bound on the omitted remainder above.
struct TailBracket {
    Rational lower;
    Rational upper;
};

TailBracket tail_bracket(const TermFamily& term, std::int64_t x_start, std::int64_t terms);

}  // namespace diffsum
