#include "diffsum/reference.hpp"

#include <stdexcept>

#include "diffsum/errors.hpp"

namespace diffsum {

namespace {

struct BoundedValue {
    Rational value;
    Rational bound;  // first omitted term of an alternating decreasing series
};

// atan(1/m) = sum_j (-1)^j / ((2j+1) m^{2j+1}); stops once the next term,
// scaled by `multiplier`, is within `budget`. The tail of an alternating
// series with decreasing terms is bounded by its first omitted term.
BoundedValue arctan_reciprocal(long m, const Rational& multiplier, const Rational& budget) {
    const Rational m_squared_inv = Rational(1, m * m);
    Rational power(1, m);  // 1/m^{2j+1}
    Rational acc(0);
    int j = 0;
    while (true) {
        Rational term = power / Rational(2 * j + 1);
        if (multiplier * term <= budget) {
            return {acc, term};
        }
        if (j % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
        power *= m_squared_inv;
        ++j;
    }
}

}  // namespace

ReferenceConstant compute_pi(int digits) {
    if (digits < 1) {
        throw std::invalid_argument("compute_pi requires digits >= 1");
    }
    const Rational target = Rational(1, 10).pow(digits + 2);
    const Rational half_target = target / Rational(2);

    const BoundedValue a = arctan_reciprocal(5, Rational(16), half_target);
    const BoundedValue b = arctan_reciprocal(239, Rational(4), half_target);

    ReferenceConstant out;
    out.name = "pi";
    out.value = Rational(16) * a.value - Rational(4) * b.value;
    out.error_bound = Rational(16) * a.bound + Rational(4) * b.bound;
    return out;
}

ReferenceConstant compute_ln2(int digits) {
    if (digits < 1) {
        throw std::invalid_argument("compute_ln2 requires digits >= 1");
    }
    const Rational target = Rational(1, 10).pow(digits + 2);

    // sum_{k>K} 1/(k 2^k) < 2^-K / (K+1)
    Rational acc(0);
    Rational power(1);  // 2^-k built up incrementally
    long k = 0;
    while (true) {
        const Rational bound = power / Rational(k + 1);
        if (bound <= target) {
            return {"ln2", acc, bound};
        }
        ++k;
        power /= Rational(2);
        acc += power / Rational(k);
    }
}

ReferenceConstant pow_with_error(const ReferenceConstant& base, int exponent) {
    if (exponent < 1) {
        throw std::invalid_argument("pow_with_error requires exponent >= 1");
    }
    // |v^e - t^e| <= e * max(|v|,|t|)^{e-1} * |v - t| <= e (|v|+bound)^{e-1} bound
    const Rational worst = base.value.abs() + base.error_bound;
    ReferenceConstant out;
    out.name = base.name + "^" + std::to_string(exponent);
    out.value = base.value.pow(exponent);
    out.error_bound = Rational(exponent) * worst.pow(exponent - 1) * base.error_bound;
    return out;
}

Rational naive_partial_sum(const TermFamily& term, std::int64_t x_start, std::int64_t terms,
                           bool alternating) {
    if (terms < 0) {
        throw std::invalid_argument("naive_partial_sum requires terms >= 0");
    }
    return detail::signed_range_sum(term, x_start, terms, alternating);
}

TailBracket tail_bracket(const TermFamily& term, std::int64_t x_start, std::int64_t terms) {
    if (terms < 1) {
        throw std::invalid_argument("tail_bracket requires terms >= 1");
    }
    if (!term.supports_same_sign()) {
        throw DivergenceError("tail_bracket needs a term with a finite tail integral");
    }
    const Rational partial = naive_partial_sum(term, x_start, terms, false);
    // remainder R = sum_{k >= m} X(k) with m = x_start + terms satisfies
    // 0 < R < integral over [m-1, inf) for strictly decreasing X
    const std::optional<Rational> integral_bound = term.tail_integral(x_start + terms - 1);
    if (!integral_bound) {
        throw std::logic_error("term claims same-sign support but has no tail integral");
    }
    return {partial, partial + *integral_bound};
}

}  // namespace diffsum
