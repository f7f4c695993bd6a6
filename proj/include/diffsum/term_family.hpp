#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "diffsum/rational.hpp"

namespace diffsum {

// A series term X(x) described abstractly: its value, its high-order
// derivatives (with respect to a unit step in x, so the summation weights
// apply as dimensionless numbers), and, when same-sign summation is
// supported, the tail integral over [x, infinity).
//
// Exact families return exact rationals. Non-exact providers return
// rational approximations quantized at a working precision of their own
// choosing and must report exact() == false.
//
// Descriptors are immutable and evaluation is pure, so a single term can
// serve concurrent summations.
class TermFamily {
public:
    virtual ~TermFamily() = default;

    virtual Rational value(std::int64_t x) const = 0;

    // m-th derivative of X at x (m = 0 is the value itself).
    virtual Rational derivative(int m, std::int64_t x) const = 0;

    // Integral of X over [x, infinity), or nullopt when unavailable.
    virtual std::optional<Rational> tail_integral(std::int64_t x) const = 0;

    // Whether the same-sign tail formula applies (finite tail integral).
    virtual bool supports_same_sign() const = 0;

    virtual bool exact() const { return true; }

    virtual std::string name() const = 0;
};

// X = 1/x^n for integer n >= 1. All outputs are exact rationals; the
// same-sign tail formula applies exactly when n >= 2, since for n = 1 the
// tail integral (and the series) diverges.
class PowerTerm final : public TermFamily {
public:
    explicit PowerTerm(int exponent);

    int exponent() const { return exponent_; }

    // 1/x^n; x = 0 is a pole.
    Rational value(std::int64_t x) const override;

    // (-1)^m n(n+1)...(n+m-1) / x^{n+m}.
    Rational derivative(int m, std::int64_t x) const override;

    // 1/((n-1) x^{n-1}); raises DivergenceError for n = 1.
    std::optional<Rational> tail_integral(std::int64_t x) const override;

    bool supports_same_sign() const override { return exponent_ >= 2; }

    std::string name() const override;

private:
    int exponent_;
};

// User-supplied derivative provider. The callbacks define the family; the
// flags declare its capabilities (a provider without a tail integral must
// not claim same-sign support).
class CustomTerm final : public TermFamily {
public:
    struct Definition {
        std::function<Rational(std::int64_t)> value;
        std::function<Rational(int, std::int64_t)> derivative;
        std::function<std::optional<Rational>(std::int64_t)> tail_integral;  // optional
        bool supports_same_sign = false;
        bool exact = true;
        std::string name = "custom";
    };

    explicit CustomTerm(Definition definition);

    Rational value(std::int64_t x) const override { return def_.value(x); }
    Rational derivative(int m, std::int64_t x) const override { return def_.derivative(m, x); }
    std::optional<Rational> tail_integral(std::int64_t x) const override;
    bool supports_same_sign() const override { return def_.supports_same_sign; }
    bool exact() const override { return def_.exact; }
    std::string name() const override { return def_.name; }

private:
    Definition def_;
};

// Head sum over indices 1 .. x-1: sum X(k), or sum (-1)^{k+1} X(k) when
// alternating. x = 1 gives the empty head (zero).
Rational head_sum(const TermFamily& term, std::int64_t x, bool alternating);

namespace detail {

// sum_{j=0}^{count-1} s_j X(first + j) with s_j = (-1)^j when alternating,
// else 1. Divide-and-conquer so that exact accumulation over long ranges
// merges balanced denominators instead of feeding one giant accumulator.
Rational signed_range_sum(const TermFamily& term, std::int64_t first, std::int64_t count,
                          bool alternating);

}  // namespace detail

}  // namespace diffsum
