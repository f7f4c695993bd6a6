#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace diffsum {

// Exact rational number, the scalar type of the whole coefficient layer.
//
// Invariants (canonical form, restored after every operation):
//   * denominator > 0,
//   * gcd(|numerator|, denominator) == 1,
//   * zero is always 0/1.
//
// Values are immutable once constructed; every operation returns a fresh
// value, so instances can be shared freely across threads.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}  // NOLINT: implicit int -> Rational is the point
    Rational(long num, long den);
    Rational(mpz_class num, mpz_class den);
    explicit Rational(const mpz_class& n) : value_(n) {}

    // Parses "p" or "p/q" with optional leading '-'.
    static Rational from_string(const std::string& text);

    const mpz_class& num() const { return value_.get_num(); }
    const mpz_class& den() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const;
    Rational abs() const;

    // Multiplicative inverse; throws DivideByZeroError on zero.
    Rational inverse() const;

    // Integer power; negative exponents invert (throws on zero base).
    Rational pow(long exponent) const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& b);
    Rational& operator-=(const Rational& b);
    Rational& operator*=(const Rational& b);
    Rational& operator/=(const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    // "p" for integers, "p/q" otherwise.
    std::string str() const;

    // Correctly rounded (round-half-even) decimal expansion with exactly
    // `digits` fractional digits. Pure integer arithmetic, no binary
    // floating point anywhere. Format: [-]<int part>.<digits>, never
    // exponent notation. digits must be >= 1.
    std::string to_decimal(int digits) const;

    // Nearest value on the 10^-digits grid (ties to even); digits >= 0.
    Rational rounded(int digits) const;

    // Nearest double; diagnostics only, never used on exact paths.
    double to_double() const { return value_.get_d(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;  // kept canonical by construction
};

inline Rational abs(const Rational& r) { return r.abs(); }

}  // namespace diffsum
