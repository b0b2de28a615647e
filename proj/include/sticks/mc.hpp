#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sticks/rng.hpp"

namespace sticks {

enum class Sampler {
    UniformSort,      // n i.i.d. uniforms, then sort
    ExponentialSums,  // order statistics as normalized partial sums of n+1 unit exponentials
};

std::string to_string(Sampler sampler);
Sampler sampler_from_string(const std::string& name); // throws std::domain_error

/// One draw of n stick lengths together with its sorted view.
struct StickSample {
    std::vector<double> lengths;
    std::vector<double> sorted;
};

struct SimulationConfig {
    int k = 2;
    int n = 1;
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 0;
    std::uint32_t workers = 1;
    Sampler sampler = Sampler::UniformSort;
};

/// Point estimate of the avoidance probability with binomial uncertainty.
/// std_error = sqrt(p(1-p)/trials) at p = estimate; ci95 is the normal
/// approximation estimate +- 1.96 * std_error.
struct EstimateReport {
    SimulationConfig config;
    std::uint64_t successes = 0;
    double estimate = 0.0;
    double std_error = 0.0;
    double ci95_low = 0.0;
    double ci95_high = 0.0;
};

// True iff every k consecutive sorted lengths sum to at most the next one:
//   sorted[l] + ... + sorted[l+k-1] <= sorted[l+k]  for all windows.
// Vacuously true when n <= k. Equivalent to: no k+1 of the lengths can form
// a (k+1)-gon.
bool window_condition_holds(const StickSample& sample, int k);
bool window_condition_sorted(std::span<const double> sorted, int k);

// Brute-force oracle: enumerates all C(n, k+1) subsets and checks that in
// each the largest length is at least the sum of the others (degenerate or
// worse). Callers gate n to keep enumeration tractable.
bool no_subset_forms_polygon(const std::vector<double>& lengths, int k);

StickSample sample_uniform_sorted(int n, Xoshiro256pp& rng);

// Order statistics drawn directly: U_(i) = (x_1+...+x_i)/S with x_j unit
// exponentials and S the sum of n+1 of them; sorted by construction.
StickSample sample_exponential_representation(int n, Xoshiro256pp& rng);

// Success tally per worker. Worker w draws from substream_seed(seed, w) and
// runs trials/workers rounds (+1 for the first trials%workers workers), so
// the result is a pure function of the config, independent of scheduling.
std::vector<std::uint64_t> per_worker_successes(const SimulationConfig& config);

// Runs the trials across workers and merges tallies by addition.
// Deterministic: identical configs produce bit-identical reports.
EstimateReport estimate(const SimulationConfig& config);

// Canonical wire form, exact field order:
// {"k":..,"n":..,"trials":..,"seed":..,"workers":..,"sampler":"uniform-sort",
//  "successes":..,"estimate":..,"stderr":..,"ci95":[lo,hi]}
std::string to_json(const EstimateReport& report);

} // namespace sticks
