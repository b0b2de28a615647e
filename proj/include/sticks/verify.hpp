#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sticks {

struct VerifyBounds {
    int k_max = 8;
    std::int64_t l_max = 50;
    int n_max = 25;
};

struct VerifyFamily {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::string first_failure; // first failing tuple with both exact values
};

struct VerifyReport {
    std::vector<VerifyFamily> families;
    bool ok() const;
};

// Runs every identity family exactly (no tolerances) over the bounded grid:
// closed-form vs iterated R-vectors, matrix-power agreement, shift law,
// first-two-rows law, k-step law, unit-vector propagation, unimodularity,
// sequence/last-entry match, the two probability evaluators, the Fibonacci
// triangle specialization, and the 1/k! boundary. `tamper` is a testing hook
// that corrupts one comparison to exercise the failure path.
VerifyReport run_verify(const VerifyBounds& bounds, bool tamper = false);

} // namespace sticks
