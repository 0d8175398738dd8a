// Copyright (c) psp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

namespace psp {

// Unbiased draw from [0, bound) by rejection. bound >= 1.
inline uint64_t draw_below(std::mt19937_64& gen, uint64_t bound) {
    uint64_t threshold = (0 - bound) % bound; // 2^64 mod bound
    for (;;) {
        uint64_t r = gen();
        if (r >= threshold)
            return r % bound;
    }
}

// Uniform integer in [lo, hi]; the width computation wraps correctly for the
// full signed range.
inline int64_t draw_range(std::mt19937_64& gen, int64_t lo, int64_t hi) {
    uint64_t width = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
    if (width == 0) // the entire 64-bit range
        return static_cast<int64_t>(gen());
    return static_cast<int64_t>(static_cast<uint64_t>(lo) + draw_below(gen, width));
}

// Mixes seed material into statistically independent streams.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

} // namespace psp
