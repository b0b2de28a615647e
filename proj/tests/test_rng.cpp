#include <doctest.h>

#include <cmath>
#include <set>

#include "sticks/rng.hpp"

TEST_CASE("splitmix64 reference stream") {
    std::uint64_t state = 0;
    CHECK(sticks::splitmix64_next(state) == 0xE220A8397B1DCDAFULL);
    CHECK(sticks::splitmix64_next(state) == 0x6E789E6AA1B965F4ULL);
    CHECK(sticks::splitmix64_next(state) == 0x06C45D188009454FULL);

    state = 42;
    CHECK(sticks::splitmix64_next(state) == 0xBDD732262FEB6E95ULL);
    CHECK(sticks::splitmix64_next(state) == 0x28EFE333B266F103ULL);
}

TEST_CASE("substream keys are deterministic and distinct per worker") {
    std::set<std::uint64_t> keys;
    for (std::uint64_t w = 0; w < 1000; ++w) {
        const std::uint64_t key = sticks::substream_seed(12345, w);
        CHECK(key == sticks::substream_seed(12345, w));
        keys.insert(key);
    }
    CHECK(keys.size() == 1000);
    CHECK(sticks::substream_seed(1, 0) != sticks::substream_seed(2, 0));
}

TEST_CASE("xoshiro256++ streams are reproducible per key") {
    sticks::Xoshiro256pp a(7), b(7), c(8);
    bool all_equal = true, any_diff = false;
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t va = a.next();
        all_equal = all_equal && (va == b.next());
        any_diff = any_diff || (va != c.next());
    }
    CHECK(all_equal);
    CHECK(any_diff);
}

TEST_CASE("unit draws live strictly inside (0,1); exponentials are positive and finite") {
    sticks::Xoshiro256pp rng(99);
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.next_unit_open();
        CHECK(u > 0.0);
        CHECK(u < 1.0);
    }
    for (int i = 0; i < 100000; ++i) {
        const double e = rng.next_exponential();
        CHECK(e > 0.0);
        CHECK(std::isfinite(e));
    }
}

TEST_CASE("unit draws have the uniform mean") {
    sticks::Xoshiro256pp rng(2024);
    const int draws = 1000000;
    double sum = 0.0;
    for (int i = 0; i < draws; ++i)
        sum += rng.next_unit_open();
    const double mean = sum / draws;
    const double se = std::sqrt(1.0 / 12.0 / draws);
    CHECK(std::abs(mean - 0.5) < 4 * se);
}
