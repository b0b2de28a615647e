#include "sticks/rng.hpp"

#include <bit>
#include <cmath>

namespace sticks {

std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t worker) {
    std::uint64_t w = worker + 1;
    std::uint64_t mixed = seed ^ splitmix64_next(w);
    return splitmix64_next(mixed);
}

Xoshiro256pp::Xoshiro256pp(std::uint64_t key) {
    for (auto& word : s_)
        word = splitmix64_next(key);
}

std::uint64_t Xoshiro256pp::next() {
    const std::uint64_t result = std::rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = std::rotl(s_[3], 45);
    return result;
}

double Xoshiro256pp::next_unit_open() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
}

double Xoshiro256pp::next_exponential() {
    return -std::log1p(-next_unit_open());
}

} // namespace sticks
