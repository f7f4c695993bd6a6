#include "diffsum/coefficients.hpp"

#include <mutex>
#include <stdexcept>

namespace diffsum {

namespace {

// a_k = 2/(2k+1) * sum_{i+j=k} a_i a_j, seeded with a_1 = 1/6. The seed and
// the convolution both come from matching powers in u' + u^2 - 1 = 0 for
// u = 1/t + 2 a_1 t - 2 a_2 t^3 + ...
void extend_coth(std::vector<Rational>& a, int max_index) {
    if (a.empty() && max_index >= 1) {
        a.emplace_back(1, 6);
    }
    for (int k = static_cast<int>(a.size()) + 1; k <= max_index; ++k) {
        Rational conv(0);
        for (int i = 1; i <= k - 1; ++i) {
            conv += a[static_cast<size_t>(i - 1)] * a[static_cast<size_t>(k - i - 1)];
        }
        a.push_back(Rational(2) * conv / Rational(2 * k + 1));
    }
}

// (2k+1) c_k = sum_{i+j=k-1} c_i c_j, seeded with c_0 = 1, from the same
// differential equation applied to u = c_0 t - c_1 t^3 + c_2 t^5 - ...
void extend_tanh(std::vector<Rational>& c, int max_index) {
    if (c.empty()) {
        c.emplace_back(1);
    }
    for (int k = static_cast<int>(c.size()); k <= max_index; ++k) {
        Rational conv(0);
        for (int i = 0; i <= k - 1; ++i) {
            conv += c[static_cast<size_t>(i)] * c[static_cast<size_t>(k - 1 - i)];
        }
        c.push_back(conv / Rational(2 * k + 1));
    }
}

}  // namespace

CoefficientTable::CoefficientTable(Family family, int max_index) : family_(family) {
    const int lowest = family == Family::Coth ? 1 : 0;
    if (max_index < lowest) {
        throw std::invalid_argument("coefficient table needs at least its first entry");
    }
    extend(max_index);
}

int CoefficientTable::max_index() const {
    const int n = static_cast<int>(values_.size());
    return family_ == Family::Coth ? n : n - 1;
}

const Rational& CoefficientTable::at(int k) const {
    const int pos = family_ == Family::Coth ? k - 1 : k;
    if (pos < 0 || pos >= static_cast<int>(values_.size())) {
        throw std::out_of_range("coefficient index outside the computed table");
    }
    return values_[static_cast<size_t>(pos)];
}

void CoefficientTable::extend(int max_index) {
    if (family_ == Family::Coth) {
        extend_coth(values_, max_index);
    } else {
        extend_tanh(values_, max_index);
    }
}

CoefficientTable coth_coefficients(int count) {
    if (count < 1) {
        throw std::invalid_argument("coth_coefficients requires count >= 1");
    }
    return CoefficientTable(Family::Coth, count);
}

CoefficientTable tanh_coefficients(int count) {
    if (count < 0) {
        throw std::invalid_argument("tanh_coefficients requires count >= 0");
    }
    return CoefficientTable(Family::Tanh, count);
}

EngineWeights engine_weights(int max_order) {
    if (max_order < 1) {
        throw std::invalid_argument("engine_weights requires max_order >= 1");
    }
    const std::vector<Rational> a = coefficient_cache().coth_prefix(max_order);
    const std::vector<Rational> c = coefficient_cache().tanh_prefix(max_order - 1);

    EngineWeights w;
    w.max_order = max_order;
    w.same_sign.reserve(static_cast<size_t>(max_order));
    w.alternating.reserve(static_cast<size_t>(max_order));
    for (int k = 1; k <= max_order; ++k) {
        const Rational sign(k % 2 == 0 ? 1 : -1);
        w.same_sign.push_back(sign * a[static_cast<size_t>(k - 1)] / Rational(2).pow(2 * k - 1));
        w.alternating.push_back(sign * c[static_cast<size_t>(k - 1)] / Rational(4).pow(k));
    }
    return w;
}

Rational ratio_identity_check(int k) {
    if (k < 1) {
        throw std::invalid_argument("ratio_identity_check requires k >= 1");
    }
    const EngineWeights w = engine_weights(k);
    return w.f(k) / w.e(k);
}

Rational zeta_relation(int k) {
    if (k < 1) {
        throw std::invalid_argument("zeta_relation requires k >= 1");
    }
    return coefficient_cache().coth_prefix(k).back();
}

namespace {

struct CacheState {
    std::mutex mu;
    std::vector<Rational> coth;  // a_1.. at [k-1]
    std::vector<Rational> tanh;  // c_0.. at [k]
};

CacheState& cache_state() {
    static CacheState state;
    return state;
}

}  // namespace

std::vector<Rational> CoefficientCache::coth_prefix(int max_index) {
    if (max_index < 1) {
        throw std::invalid_argument("coth_prefix requires max_index >= 1");
    }
    CacheState& s = cache_state();
    std::lock_guard<std::mutex> lock(s.mu);
    extend_coth(s.coth, max_index);
    return {s.coth.begin(), s.coth.begin() + max_index};
}

std::vector<Rational> CoefficientCache::tanh_prefix(int max_index) {
    if (max_index < 0) {
        throw std::invalid_argument("tanh_prefix requires max_index >= 0");
    }
    CacheState& s = cache_state();
    std::lock_guard<std::mutex> lock(s.mu);
    extend_tanh(s.tanh, max_index);
    return {s.tanh.begin(), s.tanh.begin() + max_index + 1};
}

CoefficientCache& coefficient_cache() {
    static CoefficientCache cache;
    return cache;
}

}  // namespace diffsum
