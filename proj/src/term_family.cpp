#include "diffsum/term_family.hpp"

#include <stdexcept>
#include <utility>

#include "diffsum/errors.hpp"

namespace diffsum {

namespace {

void check_power_domain(std::int64_t x) {
    if (x == 0) {
        throw PoleError("power term has a pole at x = 0");
    }
    if (x < 0) {
        throw std::invalid_argument("power term domain is x >= 1");
    }
}

}  // namespace

PowerTerm::PowerTerm(int exponent) : exponent_(exponent) {
    if (exponent < 1) {
        throw std::invalid_argument("power term requires an integer exponent n >= 1");
    }
}

Rational PowerTerm::value(std::int64_t x) const {
    check_power_domain(x);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(x),
                  static_cast<unsigned long>(exponent_));
    return Rational(mpz_class(1), std::move(den));
}

Rational PowerTerm::derivative(int m, std::int64_t x) const {
    if (m < 0) {
        throw std::invalid_argument("derivative order must be >= 0");
    }
    check_power_domain(x);
    // rising factorial n(n+1)...(n+m-1)
    mpz_class num(1);
    for (int i = 0; i < m; ++i) {
        num *= exponent_ + i;
    }
    if (m % 2 == 1) {
        num = -num;
    }
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(x),
                  static_cast<unsigned long>(exponent_ + m));
    return Rational(std::move(num), std::move(den));
}

std::optional<Rational> PowerTerm::tail_integral(std::int64_t x) const {
    if (exponent_ < 2) {
        throw DivergenceError("tail integral of 1/x^n diverges for n <= 1");
    }
    check_power_domain(x);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(x),
                  static_cast<unsigned long>(exponent_ - 1));
    den *= exponent_ - 1;
    return Rational(mpz_class(1), std::move(den));
}

std::string PowerTerm::name() const {
    return "1/x^" + std::to_string(exponent_);
}

CustomTerm::CustomTerm(Definition definition) : def_(std::move(definition)) {
    if (!def_.value || !def_.derivative) {
        throw std::invalid_argument("custom term needs value and derivative callbacks");
    }
    if (def_.supports_same_sign && !def_.tail_integral) {
        throw std::invalid_argument(
            "custom term cannot support same-sign summation without a tail integral");
    }
}

std::optional<Rational> CustomTerm::tail_integral(std::int64_t x) const {
    if (!def_.tail_integral) {
        return std::nullopt;
    }
    return def_.tail_integral(x);
}

Rational head_sum(const TermFamily& term, std::int64_t x, bool alternating) {
    if (x < 1) {
        throw std::invalid_argument("head_sum requires x >= 1");
    }
    return detail::signed_range_sum(term, 1, x - 1, alternating);
}

namespace detail {

Rational signed_range_sum(const TermFamily& term, std::int64_t first, std::int64_t count,
                          bool alternating) {
    if (count < 0) {
        throw std::invalid_argument("signed_range_sum requires count >= 0");
    }
    if (count <= 64) {
        Rational acc(0);
        for (std::int64_t j = 0; j < count; ++j) {
            const Rational v = term.value(first + j);
            if (alternating && j % 2 == 1) {
                acc -= v;
            } else {
                acc += v;
            }
        }
        return acc;
    }
    const std::int64_t half = count / 2;
    const Rational left = signed_range_sum(term, first, half, alternating);
    Rational right = signed_range_sum(term, first + half, count - half, alternating);
    if (alternating && half % 2 == 1) {
        right = -right;
    }
    return left + right;
}

}  // namespace detail

}  // namespace diffsum
