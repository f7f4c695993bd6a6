#include "diffsum/power_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "diffsum/errors.hpp"

namespace diffsum {

PowerSeries::PowerSeries(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {}

PowerSeries PowerSeries::zero(int order) {
    if (order < 0) {
        throw std::invalid_argument("series order must be non-negative");
    }
    return PowerSeries(std::vector<Rational>(static_cast<size_t>(order)));
}

PowerSeries PowerSeries::constant(const Rational& c, int order) {
    PowerSeries s = zero(order);
    if (order > 0) {
        s.coefficients_[0] = c;
    }
    return s;
}

PowerSeries PowerSeries::monomial(const Rational& c, int degree, int order) {
    if (degree < 0) {
        throw std::invalid_argument("monomial degree must be non-negative");
    }
    PowerSeries s = zero(order);
    if (degree < order) {
        s.coefficients_[static_cast<size_t>(degree)] = c;
    }
    return s;
}

PowerSeries PowerSeries::exp_z(int order) {
    if (order < 1) {
        throw std::invalid_argument("exp_z requires order >= 1");
    }
    std::vector<Rational> c(static_cast<size_t>(order));
    c[0] = Rational(1);
    for (int k = 1; k < order; ++k) {
        c[static_cast<size_t>(k)] = c[static_cast<size_t>(k - 1)] / Rational(k);
    }
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::derivative() const {
    if (order() == 0) {
        return zero(0);
    }
    std::vector<Rational> c(static_cast<size_t>(order() - 1));
    for (int k = 1; k < order(); ++k) {
        c[static_cast<size_t>(k - 1)] = Rational(k) * coefficients_[static_cast<size_t>(k)];
    }
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::shift_up(int k) const {
    if (k < 0) {
        throw std::invalid_argument("shift_up requires k >= 0");
    }
    std::vector<Rational> c(static_cast<size_t>(order() + k));
    std::copy(coefficients_.begin(), coefficients_.end(), c.begin() + k);
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::shift_down(int k) const {
    if (k < 0 || k > order() || leading_zeros() < k) {
        throw SeriesDivisionError("shift_down needs at least k leading zero coefficients");
    }
    return PowerSeries(std::vector<Rational>(coefficients_.begin() + k, coefficients_.end()));
}

int PowerSeries::leading_zeros() const {
    int n = 0;
    while (n < order() && coefficients_[static_cast<size_t>(n)].is_zero()) {
        ++n;
    }
    return n;
}

bool PowerSeries::is_zero_through(int degree) const {
    if (degree >= order()) {
        throw std::invalid_argument("degree not represented at this truncation order");
    }
    for (int k = 0; k <= degree; ++k) {
        if (!coefficients_[static_cast<size_t>(k)].is_zero()) {
            return false;
        }
    }
    return true;
}

PowerSeries PowerSeries::operator-() const {
    std::vector<Rational> c(coefficients_.size());
    for (size_t k = 0; k < c.size(); ++k) {
        c[k] = -coefficients_[k];
    }
    return PowerSeries(std::move(c));
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        c[static_cast<size_t>(k)] = a[k] + b[k];
    }
    return PowerSeries(std::move(c));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        c[static_cast<size_t>(k)] = a[k] - b[k];
    }
    return PowerSeries(std::move(c));
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (int j = 0; i + j < n; ++j) {
            if (!b[j].is_zero()) {
                c[static_cast<size_t>(i + j)] += a[i] * b[j];
            }
        }
    }
    return PowerSeries(std::move(c));
}

PowerSeries operator*(const Rational& c, const PowerSeries& a) {
    std::vector<Rational> r(a.coefficients().size());
    for (size_t k = 0; k < r.size(); ++k) {
        r[k] = c * a.coefficients()[k];
    }
    return PowerSeries(std::move(r));
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
    const int cancel = b.leading_zeros();
    if (cancel == b.order()) {
        throw SeriesDivisionError("division by a series that is zero through its truncation order");
    }
    if (a.leading_zeros() < cancel) {
        throw SeriesDivisionError(
            "division by a series with leading zeros needs the same zero prefix on the dividend");
    }
    const PowerSeries num = a.shift_down(cancel);
    const PowerSeries den = b.shift_down(cancel);

    const int n = std::min(num.order(), den.order());
    std::vector<Rational> q(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        Rational acc = k < num.order() ? num[k] : Rational(0);
        for (int j = 1; j <= k && j < den.order(); ++j) {
            acc -= den[j] * q[static_cast<size_t>(k - j)];
        }
        q[static_cast<size_t>(k)] = acc / den[0];
    }
    return PowerSeries(std::move(q));
}

std::string PowerSeries::debug_json() const {
    std::string out = "[";
    for (size_t k = 0; k < coefficients_.size(); ++k) {
        if (k > 0) {
            out += ",";
        }
        out += "\"" + coefficients_[k].num().get_str() + "/" + coefficients_[k].den().get_str() + "\"";
    }
    out += "]";
    return out;
}

namespace {

// sinh(t)/t and cosh(t), the even/odd halves of the exponential series.
PowerSeries sinh_over_t(int order) {
    std::vector<Rational> c(static_cast<size_t>(order));
    Rational factorial_inv(1);  // 1/(k+1)! built incrementally
    for (int k = 0; k < order; ++k) {
        factorial_inv /= Rational(k + 1);
        if (k % 2 == 0) {
            c[static_cast<size_t>(k)] = factorial_inv;
        }
    }
    return PowerSeries(std::move(c));
}

PowerSeries cosh_t(int order) {
    std::vector<Rational> c(static_cast<size_t>(order));
    Rational factorial_inv(1);
    for (int k = 0; k < order; ++k) {
        if (k % 2 == 0) {
            c[static_cast<size_t>(k)] = factorial_inv;
        }
        factorial_inv /= Rational(k + 1);
    }
    return PowerSeries(std::move(c));
}

}  // namespace

PowerSeries ratio_even_odd(int order, RatioKind kind) {
    if (order < 2) {
        throw std::invalid_argument("ratio_even_odd requires order >= 2");
    }
    switch (kind) {
        case RatioKind::CothLike:
            // t*coth(t): both halves start at 1, so the quotient is a power series.
            return cosh_t(order) / sinh_over_t(order);
        case RatioKind::TanhLike: {
            // tanh(t) = (t + t^3/6 + ...) / (1 + t^2/2 + ...)
            return sinh_over_t(order - 1).shift_up(1) / cosh_t(order);
        }
    }
    throw std::invalid_argument("unknown ratio kind");
}

PowerSeries same_sign_generating_function(int order) {
    if (order < 1) {
        throw std::invalid_argument("generating function requires order >= 1");
    }
    // z and e^z - 1 share a one-term zero prefix that cancels in the division.
    const PowerSeries z = PowerSeries::monomial(Rational(1), 1, order + 1);
    const PowerSeries expm1 = PowerSeries::exp_z(order + 1) - PowerSeries::constant(Rational(1), order + 1);
    return z / expm1;
}

PowerSeries alternating_generating_function(int order) {
    if (order < 1) {
        throw std::invalid_argument("generating function requires order >= 1");
    }
    const PowerSeries one = PowerSeries::constant(Rational(1), order);
    return one / (one + PowerSeries::exp_z(order));
}

}  // namespace diffsum
