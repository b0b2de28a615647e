#pragma once

#include <array>
#include <cstdint>

namespace sticks {

// One SplitMix64 step: advances the state by the golden-ratio increment and
// returns the finalized value. For a fixed number of steps the output is a
// bijection of the starting state.
std::uint64_t splitmix64_next(std::uint64_t& state);

// Substream derivation used to partition Monte Carlo work:
//   substream_seed(seed, w) = splitmix64(seed XOR splitmix64(w + 1)).
// Bijectivity of each step guarantees distinct workers get distinct keys for
// any fixed base seed.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t worker);

/// xoshiro256++ generator (jump-ahead-capable family), state expanded from a
/// 64-bit key via four SplitMix64 steps, which also keeps the state nonzero.
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t key);

    std::uint64_t next();

    // Uniform double in the open interval (0,1): ((next() >> 11) + 0.5) * 2^-53.
    double next_unit_open();

    // Unit-rate exponential via inverse CDF, -log1p(-u); finite and positive
    // because u is drawn from the open interval.
    double next_exponential();

private:
    std::array<std::uint64_t, 4> s_;
};

} // namespace sticks
