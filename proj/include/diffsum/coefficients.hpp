#pragma once

#include <vector>

#include "diffsum/rational.hpp"

namespace diffsum {

// The two exact coefficient families behind the summation formulas.
//
// Both come from the same differential equation u' + u^2 - 1 = 0 applied to
// the even/odd exponential ratios:
//
//   Coth: u = 1/t + 2*a1*t - 2*a2*t^3 + 2*a3*t^5 - ...   (a1 = 1/6, all a_k > 0)
//         a_k = 2/(2k+1) * sum_{i+j=k, i,j>=1} a_i a_j   for k >= 2
//         a_k is also zeta(2k)/pi^{2k}.
//
//   Tanh: u = c0*t - c1*t^3 + c2*t^5 - ...               (c0 = 1, all c_k > 0)
//         (2k+1) c_k = sum_{i+j=k-1, i,j>=0} c_i c_j     for k >= 1
enum class Family { Coth, Tanh };

// Append-only table of one family. Coth entries are 1-indexed (a_1 = 1/6),
// tanh entries are 0-indexed (c_0 = 1). Extending never changes existing
// entries.
class CoefficientTable {
public:
    CoefficientTable(Family family, int max_index);

    Family family() const { return family_; }

    // Highest stored index (coth: >= 1, tanh: >= 0).
    int max_index() const;

    // Entry at the family's native index.
    const Rational& at(int k) const;

    // Grow the table up to max_index; shrinking requests are no-ops.
    void extend(int max_index);

    const std::vector<Rational>& values() const { return values_; }

private:
    Family family_;
    std::vector<Rational> values_;
};

// a_1..a_count (count >= 1).
CoefficientTable coth_coefficients(int count);

// c_0..c_count (count >= 0).
CoefficientTable tanh_coefficients(int count);

// Per-order weights of the two tail formulas. The weight of the (2k-1)-th
// derivative is e_k for same-sign series and f_k for alternating series:
//
//   e_k = (-1)^k a_k     / 2^{2k-1}     (e_1 = -1/12)
//   f_k = (-1)^k c_{k-1} / 4^k          (f_1 = -1/4)
//
// and f_k = (2^{2k} - 1) e_k exactly.
struct EngineWeights {
    std::vector<Rational> same_sign;    // e_k stored at [k-1]
    std::vector<Rational> alternating;  // f_k stored at [k-1]
    int max_order = 0;

    const Rational& e(int k) const { return same_sign.at(static_cast<size_t>(k - 1)); }
    const Rational& f(int k) const { return alternating.at(static_cast<size_t>(k - 1)); }
};

EngineWeights engine_weights(int max_order);

// f_k / e_k; equals 2^{2k} - 1 exactly.
Rational ratio_identity_check(int k);

// a_k, i.e. zeta(2k)/pi^{2k} (zeta(2) = a_1 pi^2 = pi^2/6, ...).
Rational zeta_relation(int k);

// Process-wide append-only cache of both families. Reads of already computed
// entries are safe from any thread; extension happens under a single writer
// lock. Prefix copies are returned so callers never alias cache storage.
class CoefficientCache {
public:
    // a_1..a_max_index (vector index k-1).
    std::vector<Rational> coth_prefix(int max_index);

    // c_0..c_max_index (vector index k).
    std::vector<Rational> tanh_prefix(int max_index);
};

CoefficientCache& coefficient_cache();

}  // namespace diffsum
