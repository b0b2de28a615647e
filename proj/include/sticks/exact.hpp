#pragma once

#include <string>

#include "sticks/numeric.hpp"

namespace sticks {

/// Probability that no k+1 of n i.i.d. uniform [0,1] stick lengths can form
/// a (k+1)-gon, as an exact reduced rational. value == 1 exactly when n <= k
/// (no (k+1)-subset exists).
struct ExactProbability {
    int k = 0;
    int n = 0;
    BigRat value;
};

// Closed-form product over the k-step sequence:
//   P = prod_{l=1}^{n-k+2} 1/F_k^l
//     * prod_{i=1}^{k-2} 1/(F_k^{n-i+1} - sum_{j=1}^{k-i-1} (k-i-j) F_k^{n-k+j})
// for n >= k+1; exactly 1 for n <= k. With k=2 the second product is empty and
// the result is the reciprocal of the product of the first n Fibonacci numbers.
ExactProbability exact_probability(int k, int n);

// Independent route: P = prod_{l=1}^{n-k} 1/R_k^l * prod_{i=1}^{k} 1/R_i^{n-k+1}
// over coefficient-vector entries. Requires n >= k+1; equals exact_probability
// exactly.
ExactProbability exact_probability_proof_form(int k, int n);

/// Correctly rounded (round-half-even) decimal expansion to `digits`
/// fractional digits. `exact` means the expansion terminates within them.
struct Decimal {
    std::string text;
    bool exact = false;
};

Decimal decimal_expand(const BigRat& value, int digits); // value >= 0, digits >= 1

// Expansion plus exactness marker, e.g. "0.5000 (exact)" or "0.166667".
std::string decimal_render(const ExactProbability& p, int digits);

} // namespace sticks
