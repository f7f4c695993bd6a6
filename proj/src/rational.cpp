#include "diffsum/rational.hpp"

#include <ostream>
#include <utility>

#include "diffsum/errors.hpp"

namespace diffsum {

namespace {

mpq_class make_canonical(mpz_class num, mpz_class den) {
    if (sgn(den) == 0) {
        throw DivideByZeroError("rational with zero denominator");
    }
    mpq_class q;
    q.get_num() = std::move(num);
    q.get_den() = std::move(den);
    q.canonicalize();  // reduces by gcd, moves the sign to the numerator
    return q;
}

}  // namespace

Rational::Rational(long num, long den)
    : value_(make_canonical(mpz_class(num), mpz_class(den))) {}

Rational::Rational(mpz_class num, mpz_class den)
    : value_(make_canonical(std::move(num), std::move(den))) {}

Rational Rational::from_string(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Rational(mpz_class(text), mpz_class(1));
    }
    return Rational(mpz_class(text.substr(0, slash)), mpz_class(text.substr(slash + 1)));
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-value_));
}

Rational Rational::abs() const {
    return sgn(value_) < 0 ? -*this : *this;
}

Rational Rational::inverse() const {
    if (is_zero()) {
        throw DivideByZeroError("inverse of zero");
    }
    return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num().get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den().get_mpz_t(), static_cast<unsigned long>(exponent));
    // powers of a canonical fraction stay canonical
    mpq_class q;
    q.get_num() = std::move(num);
    q.get_den() = std::move(den);
    return Rational(std::move(q));
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.value_ + b.value_));
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.value_ - b.value_));
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.value_ * b.value_));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) {
        throw DivideByZeroError("rational division by zero");
    }
    return Rational(mpq_class(a.value_ / b.value_));
}

Rational& Rational::operator+=(const Rational& b) {
    value_ += b.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& b) {
    value_ -= b.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& b) {
    value_ *= b.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& b) {
    if (b.is_zero()) {
        throw DivideByZeroError("rational division by zero");
    }
    value_ /= b.value_;
    return *this;
}

std::string Rational::str() const {
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

namespace {

// floor(|num| * 10^digits / den) rounded half to even on the last unit
mpz_class scaled_magnitude(const mpz_class& num, const mpz_class& den, const mpz_class& scale) {
    mpz_class scaled = ::abs(num) * scale;
    mpz_class quotient, remainder;
    mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), scaled.get_mpz_t(),
                den.get_mpz_t());
    const mpz_class twice_rem = 2 * remainder;
    const int c = cmp(twice_rem, den);
    if (c > 0 || (c == 0 && mpz_odd_p(quotient.get_mpz_t()))) {
        quotient += 1;
    }
    return quotient;
}

}  // namespace

std::string Rational::to_decimal(int digits) const {
    if (digits < 1) {
        throw std::invalid_argument("to_decimal requires digits >= 1");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10u, static_cast<unsigned long>(digits));

    mpz_class quotient = scaled_magnitude(value_.get_num(), value_.get_den(), scale);

    std::string body = quotient.get_str();
    if (body.size() <= static_cast<size_t>(digits)) {
        body.insert(0, static_cast<size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<size_t>(digits), ".");
    if (sign() < 0) {
        body.insert(0, "-");
    }
    return body;
}

Rational Rational::rounded(int digits) const {
    if (digits < 0) {
        throw std::invalid_argument("rounded requires digits >= 0");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10u, static_cast<unsigned long>(digits));
    mpz_class quotient = scaled_magnitude(value_.get_num(), value_.get_den(), scale);
    if (sign() < 0) {
        quotient = -quotient;
    }
    return Rational(std::move(quotient), std::move(scale));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace diffsum
