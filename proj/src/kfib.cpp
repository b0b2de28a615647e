#include "sticks/kfib.hpp"

#include <atomic>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

namespace sticks {

namespace {

std::atomic<int> g_max_order{64};

void check_order(int k) {
    if (k < 2)
        throw std::domain_error("k must be >= 2 (got " + std::to_string(k) + ")");
    const int cap = g_max_order.load(std::memory_order_relaxed);
    if (k > cap)
        throw std::domain_error("k must be <= " + std::to_string(cap) + " (got " +
                                std::to_string(k) + "); raise the cap via set_max_order or STICKS_MAX_K");
}

} // namespace

int max_order() { return g_max_order.load(std::memory_order_relaxed); }

void set_max_order(int cap) {
    if (cap < 2)
        throw std::domain_error("max order must be >= 2 (got " + std::to_string(cap) + ")");
    g_max_order.store(cap, std::memory_order_relaxed);
}

KStepSequence::KStepSequence(int order) : k_(order) {
    check_order(order);
    terms_.resize(static_cast<std::size_t>(k_)); // l = 2-k .. 1
    terms_.back() = 1;                           // term(1) = 1, the rest stay 0
}

BigInt KStepSequence::term(std::int64_t l) const {
    if (l < 2 - k_)
        throw std::domain_error("l must be >= 2-k = " + std::to_string(2 - k_) +
                                " (got " + std::to_string(l) + ")");
    std::lock_guard lock(mu_);
    const std::size_t want = slot(l);
    while (terms_.size() <= want) {
        BigInt next = 0;
        const std::size_t s = terms_.size();
        for (int j = 1; j <= k_; ++j)
            next += terms_[s - static_cast<std::size_t>(j)];
        terms_.push_back(std::move(next));
    }
    return terms_[want];
}

std::size_t KStepSequence::cached_terms() const {
    std::lock_guard lock(mu_);
    return terms_.size();
}

BigInt kfib_term(int k, std::int64_t l) {
    check_order(k);
    static std::mutex registry_mu;
    static std::map<int, std::unique_ptr<KStepSequence>> registry;
    KStepSequence* seq = nullptr;
    {
        std::lock_guard lock(registry_mu);
        auto& entry = registry[k];
        if (!entry)
            entry = std::make_unique<KStepSequence>(k);
        seq = entry.get();
    }
    return seq->term(l);
}

std::vector<BigInt> CompanionMatrix::apply(const std::vector<BigInt>& v) const {
    std::vector<BigInt> out(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        BigInt acc = 0;
        for (int j = 0; j < k; ++j)
            acc += at(i, j) * v[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = std::move(acc);
    }
    return out;
}

CompanionMatrix CompanionMatrix::multiply(const CompanionMatrix& other) const {
    CompanionMatrix out;
    out.k = k;
    out.entries.assign(static_cast<std::size_t>(k) * k, 0);
    for (int i = 0; i < k; ++i)
        for (int t = 0; t < k; ++t) {
            const BigInt& a = at(i, t);
            if (a == 0)
                continue;
            for (int j = 0; j < k; ++j)
                out.at(i, j) += a * other.at(t, j);
        }
    return out;
}

CompanionMatrix CompanionMatrix::power(std::int64_t e) const {
    if (e < 0)
        throw std::domain_error("matrix exponent must be >= 0 (got " + std::to_string(e) + ")");
    CompanionMatrix result;
    result.k = k;
    result.entries.assign(static_cast<std::size_t>(k) * k, 0);
    for (int i = 0; i < k; ++i)
        result.at(i, i) = 1;
    CompanionMatrix base = *this;
    while (e > 0) {
        if (e & 1)
            result = result.multiply(base);
        e >>= 1;
        if (e > 0)
            base = base.multiply(base);
    }
    return result;
}

BigInt CompanionMatrix::determinant() const {
    // Bareiss fraction-free elimination; every division below is exact.
    std::vector<BigInt> m = entries;
    auto cell = [&](int i, int j) -> BigInt& { return m[static_cast<std::size_t>(i) * k + j]; };
    BigInt prev = 1;
    int sign = 1;
    for (int p = 0; p < k - 1; ++p) {
        if (cell(p, p) == 0) {
            int swap_row = -1;
            for (int i = p + 1; i < k; ++i)
                if (cell(i, p) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0)
                return 0;
            for (int j = 0; j < k; ++j)
                std::swap(cell(p, j), cell(swap_row, j));
            sign = -sign;
        }
        for (int i = p + 1; i < k; ++i)
            for (int j = p + 1; j < k; ++j)
                cell(i, j) = (cell(i, j) * cell(p, p) - cell(i, p) * cell(p, j)) / prev;
        prev = cell(p, p);
    }
    return sign * cell(k - 1, k - 1);
}

CompanionMatrix companion_matrix(int k) {
    check_order(k);
    CompanionMatrix a;
    a.k = k;
    a.entries.assign(static_cast<std::size_t>(k) * k, 0);
    a.at(0, 0) = 1;
    a.at(0, k - 1) = k - 1;
    a.at(1, 0) = 1;
    a.at(1, k - 1) = k - 2;
    for (int i = 2; i < k; ++i) {
        a.at(i, i - 1) = 1;
        a.at(i, k - 1) = k - i - 1;
    }
    return a;
}

namespace {

void check_r_index(std::int64_t l) {
    if (l < 1)
        throw std::domain_error("l must be >= 1 (got " + std::to_string(l) + ")");
}

} // namespace

RVector r_vector(int k, std::int64_t l) {
    check_order(k);
    check_r_index(l);
    const CompanionMatrix a = companion_matrix(k);
    std::vector<BigInt> v(static_cast<std::size_t>(k), 1);
    for (std::int64_t step = 1; step < l; ++step)
        v = a.apply(v);
    return RVector{k, l, std::move(v)};
}

RVector r_vector_power(int k, std::int64_t l) {
    check_order(k);
    check_r_index(l);
    const CompanionMatrix a = companion_matrix(k).power(l - 1);
    return RVector{k, l, a.apply(std::vector<BigInt>(static_cast<std::size_t>(k), 1))};
}

RVector r_vector_closed_form(int k, std::int64_t l) {
    check_order(k);
    check_r_index(l);
    KStepSequence seq(k);
    std::vector<BigInt> v(static_cast<std::size_t>(k));
    v[static_cast<std::size_t>(k - 1)] = seq.term(l);
    v[static_cast<std::size_t>(k - 2)] = seq.term(l + 1);
    for (int i = 1; i <= k - 2; ++i) {
        BigInt entry = seq.term(l + k - i);
        for (int j = 1; j <= k - i - 1; ++j)
            entry -= (k - i - j) * seq.term(l + j - 1);
        v[static_cast<std::size_t>(i - 1)] = std::move(entry);
    }
    return RVector{k, l, std::move(v)};
}

} // namespace sticks
