#include "sticks/exact.hpp"

#include <stdexcept>
#include <utility>

#include "sticks/kfib.hpp"

namespace sticks {

namespace {

void check_args(int k, int n) {
    if (k < 2)
        throw std::domain_error("k must be >= 2 (got " + std::to_string(k) + ")");
    if (n < 1)
        throw std::domain_error("n must be >= 1 (got " + std::to_string(n) + ")");
}

} // namespace

ExactProbability exact_probability(int k, int n) {
    check_args(k, n);
    if (n <= k)
        return ExactProbability{k, n, BigRat(1)};

    BigRat p(1);
    for (int l = 1; l <= n - k + 2; ++l)
        p /= kfib_term(k, l);
    for (int i = 1; i <= k - 2; ++i) {
        BigInt d = kfib_term(k, n - i + 1);
        for (int j = 1; j <= k - i - 1; ++j)
            d -= (k - i - j) * kfib_term(k, n - k + j);
        if (d <= 0)
            throw std::logic_error("internal consistency: correction factor <= 0 at k=" +
                                   std::to_string(k) + " n=" + std::to_string(n) +
                                   " i=" + std::to_string(i) + " (value " + d.str() + ")");
        p /= d;
    }
    return ExactProbability{k, n, std::move(p)};
}

ExactProbability exact_probability_proof_form(int k, int n) {
    check_args(k, n);
    if (n <= k)
        throw std::domain_error("n must be >= k+1 = " + std::to_string(k + 1) +
                                " (got " + std::to_string(n) + ")");

    const CompanionMatrix a = companion_matrix(k);
    std::vector<BigInt> v(static_cast<std::size_t>(k), 1); // R^1
    BigRat p(1);
    for (int l = 1; l <= n - k; ++l) {
        p /= v.back(); // R_k^l
        v = a.apply(v);
    }
    for (const BigInt& entry : v) { // R^{n-k+1}
        if (entry <= 0)
            throw std::logic_error("internal consistency: coefficient-vector entry <= 0 at k=" +
                                   std::to_string(k) + " n=" + std::to_string(n));
        p /= entry;
    }
    return ExactProbability{k, n, std::move(p)};
}

Decimal decimal_expand(const BigRat& value, int digits) {
    if (digits < 1)
        throw std::domain_error("digits must be >= 1 (got " + std::to_string(digits) + ")");
    if (value < 0)
        throw std::domain_error("value must be >= 0");

    const BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(digits));
    const BigInt num = boost::multiprecision::numerator(value) * scale;
    const BigInt den = boost::multiprecision::denominator(value);
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    // round half to even on the last digit
    if (2 * r > den || (2 * r == den && boost::multiprecision::bit_test(q, 0)))
        ++q;
    BigInt int_part, frac_part;
    boost::multiprecision::divide_qr(q, scale, int_part, frac_part);

    std::string frac = frac_part.str();
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    return Decimal{int_part.str() + "." + frac, r == 0};
}

std::string decimal_render(const ExactProbability& p, int digits) {
    Decimal d = decimal_expand(p.value, digits);
    return d.exact ? d.text + " (exact)" : d.text;
}

} // namespace sticks
