#pragma once

#include <cstdint>
#include <mutex>
#include <vector>

#include "sticks/numeric.hpp"

namespace sticks {

// Upper bound on the recurrence order k accepted by this module (default 64).
// Guards accidental pathological inputs; the CLI wires STICKS_MAX_K to
// set_max_order at startup.
int max_order();
void set_max_order(int cap);

/// Memoized k-step Fibonacci-type sequence.
///
/// For a fixed order k >= 2, term(l) is defined over l >= 2-k by
///   term(2-k) = ... = term(0) = 0,  term(1) = 1,
///   term(l)   = term(l-1) + ... + term(l-k)   for l >= 2.
/// k=2 gives the ordinary Fibonacci numbers 1, 1, 2, 3, 5, ...
///
/// Terms are exact integers, grown on demand and never evicted. Instances may
/// be shared freely across threads: cache growth is internally synchronized.
class KStepSequence {
public:
    explicit KStepSequence(int order);

    int order() const { return k_; }

    // F_k^l. Throws std::domain_error when l < 2-k.
    BigInt term(std::int64_t l) const;

    std::size_t cached_terms() const;

private:
    std::size_t slot(std::int64_t l) const { return static_cast<std::size_t>(l + k_ - 2); }

    int k_;
    mutable std::mutex mu_;
    mutable std::vector<BigInt> terms_; // slot s holds term(s + 2 - k)
};

/// The k x k integer matrix driving the R-vector recurrence:
/// rows 1 and 2 are (1,0,...,0,k-1) and (1,0,...,0,k-2); row i >= 3 has a 1 in
/// column i-1 and k-i in column k. Unimodular (determinant +-1).
struct CompanionMatrix {
    int k = 0;
    std::vector<BigInt> entries; // row-major, k*k

    const BigInt& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * k + j]; }
    BigInt& at(int i, int j) { return entries[static_cast<std::size_t>(i) * k + j]; }

    std::vector<BigInt> apply(const std::vector<BigInt>& v) const;
    CompanionMatrix multiply(const CompanionMatrix& other) const;
    CompanionMatrix power(std::int64_t e) const; // exact binary exponentiation, e >= 0
    BigInt determinant() const;                  // Bareiss, exact
};

/// Length-k coefficient vector R^l = A_k^{l-1} (1,...,1)^T. The last entry
/// equals the k-step sequence term F_k^l for every l >= 1.
struct RVector {
    int k = 0;
    std::int64_t l = 0;
    std::vector<BigInt> entries; // entries[i-1] = R_i^l, 1-based i in the math

    bool operator==(const RVector&) const = default;
};

// F_k^l through a process-wide memoized sequence per k; repeated queries are
// amortized O(1).
BigInt kfib_term(int k, std::int64_t l);

CompanionMatrix companion_matrix(int k);

// R^l by iterated exact matrix-vector products (the reference path).
RVector r_vector(int k, std::int64_t l);

// R^l via binary matrix exponentiation; agrees bit-for-bit with r_vector.
RVector r_vector_power(int k, std::int64_t l);

// R^l assembled from the closed forms over the k-step sequence:
//   R_k^l = F_k^l,  R_{k-1}^l = F_k^{l+1},
//   R_i^l = F_k^{l+k-i} - sum_{j=1}^{k-i-1} (k-i-j) F_k^{l+j-1}   (i <= k-2).
RVector r_vector_closed_form(int k, std::int64_t l);

} // namespace sticks
