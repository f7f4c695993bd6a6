#pragma once

#include <string>
#include <vector>

#include "diffsum/rational.hpp"

namespace diffsum {

// Truncated formal power series over Rational.
//
// The truncation order is the exclusive bound on represented degree:
// a series of order N carries exactly the coefficients of z^0 .. z^{N-1}.
// Every binary operation propagates the minimum of the operand orders, so
// a coefficient is only ever reported when it is actually known. Values
// are immutable and freely shareable.
class PowerSeries {
public:
    explicit PowerSeries(std::vector<Rational> coefficients);

    static PowerSeries zero(int order);
    static PowerSeries constant(const Rational& c, int order);
    // c * z^degree
    static PowerSeries monomial(const Rational& c, int degree, int order);
    // exp(z): coefficient of z^k is 1/k!
    static PowerSeries exp_z(int order);

    int order() const { return static_cast<int>(coefficients_.size()); }
    const Rational& operator[](int k) const { return coefficients_.at(static_cast<size_t>(k)); }
    const std::vector<Rational>& coefficients() const { return coefficients_; }

    // Termwise d/dz; the result's order drops by one because the top
    // coefficient of the input says nothing about the derivative there.
    PowerSeries derivative() const;

    // Multiply by z^k (order grows by k).
    PowerSeries shift_up(int k) const;

    // Divide by z^k; requires at least k leading zero coefficients.
    PowerSeries shift_down(int k) const;

    // Number of leading zero coefficients (== order() for the zero series).
    int leading_zeros() const;

    bool is_zero_through(int degree) const;

    PowerSeries operator-() const;
    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const Rational& c, const PowerSeries& a);

    // Truncated division q with q*b == a. If b has leading zeros, an equal
    // zero prefix must be present on a; the shared prefix cancels before
    // dividing (this is how z/(e^z - 1) is formed) and the result order
    // shrinks by that prefix length. A divisor with no usable leading
    // coefficient raises SeriesDivisionError.
    friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
        return a.coefficients_ == b.coefficients_;
    }
    friend bool operator!=(const PowerSeries& a, const PowerSeries& b) { return !(a == b); }

    // JSON array of "num/den" strings, for debugging dumps.
    std::string debug_json() const;

private:
    std::vector<Rational> coefficients_;
};

enum class RatioKind {
    CothLike,  // t*coth(t) = cosh(t) / (sinh(t)/t): 1 + 2A t^2 - 2B t^4 + ...
    TanhLike,  // tanh(t)   = sinh(t) / cosh(t):     t - 𝔄 t^3 + 𝔅 t^5 - ...
};

// Even/odd exponential-series quotient of the requested kind, truncated at
// `order` (order >= 2). The coth-like case is returned premultiplied by t so
// that it stays a plain power series.
PowerSeries ratio_even_odd(int order, RatioKind kind);

// z/(e^z - 1), the generating function of the same-sign summation weights.
PowerSeries same_sign_generating_function(int order);

// 1/(1 + e^z), the generating function of the alternating summation weights.
PowerSeries alternating_generating_function(int order);

}  // namespace diffsum
