// Test-only oracles, all independent of the library code paths they check:
// a Bernoulli-number generator from the classical convolution recurrence, a
// schoolbook long-division decimal renderer, and a small deterministic PRNG
// for property-style tests.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diffsum/rational.hpp"

namespace oracles {

// splitmix64; deterministic across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi]
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    diffsum::Rational rational(std::int64_t max_num = 1000000, std::int64_t max_den = 1000000) {
        return diffsum::Rational(range(-max_num, max_num), range(1, max_den));
    }

    diffsum::Rational nonzero_rational() {
        while (true) {
            diffsum::Rational r = rational();
            if (!r.is_zero()) {
                return r;
            }
        }
    }

private:
    std::uint64_t state_;
};

// B_0..B_count by sum_{j=0}^{m} binom(m+1, j) B_j = 0, i.e.
// B_m = -1/(m+1) * sum_{j<m} binom(m+1, j) B_j.
inline std::vector<diffsum::Rational> bernoulli_numbers(int count) {
    std::vector<diffsum::Rational> b;
    b.reserve(static_cast<size_t>(count) + 1);
    b.emplace_back(1);
    for (int m = 1; m <= count; ++m) {
        diffsum::Rational acc(0);
        for (int j = 0; j < m; ++j) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m + 1),
                         static_cast<unsigned long>(j));
            acc += diffsum::Rational(binom) * b[static_cast<size_t>(j)];
        }
        b.push_back(-acc / diffsum::Rational(m + 1));
    }
    return b;
}

// a_k as predicted by the Bernoulli route: |B_{2k}| 2^{2k-1} / (2k)!.
inline diffsum::Rational coth_coefficient_from_bernoulli(const std::vector<diffsum::Rational>& b,
                                                         int k) {
    mpz_class factorial;
    mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(2 * k));
    return b[static_cast<size_t>(2 * k)].abs() * diffsum::Rational(2).pow(2 * k - 1) /
           diffsum::Rational(factorial);
}

// Digit-by-digit long division with round-half-even on the last digit,
// including carry propagation into the integer part.
inline std::string long_division_decimal(const diffsum::Rational& r, int digits) {
    const mpz_class p = ::abs(r.num());
    const mpz_class& q = r.den();
    mpz_class integer_part, rem;
    mpz_tdiv_qr(integer_part.get_mpz_t(), rem.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());

    std::string fraction;
    for (int i = 0; i < digits; ++i) {
        rem *= 10;
        mpz_class digit;
        mpz_tdiv_qr(digit.get_mpz_t(), rem.get_mpz_t(), rem.get_mpz_t(), q.get_mpz_t());
        fraction += static_cast<char>('0' + digit.get_ui());
    }

    const mpz_class twice = 2 * rem;
    const int c = cmp(twice, q);
    bool round_up = c > 0;
    if (c == 0) {
        const char last = fraction.empty() ? '0' : fraction.back();
        round_up = (last - '0') % 2 == 1;
    }
    if (round_up) {
        int i = static_cast<int>(fraction.size()) - 1;
        while (i >= 0 && fraction[static_cast<size_t>(i)] == '9') {
            fraction[static_cast<size_t>(i)] = '0';
            --i;
        }
        if (i >= 0) {
            ++fraction[static_cast<size_t>(i)];
        } else {
            integer_part += 1;
        }
    }

    std::string out = integer_part.get_str() + "." + fraction;
    if (r.sign() < 0) {
        out.insert(0, "-");
    }
    return out;
}

}  // namespace oracles
