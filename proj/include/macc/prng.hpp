#pragma once

#include <cstdint>

namespace macc {

// splitmix64: 64-bit splittable generator. Streams are split by seed
// derivation, so any (file, position) subfile can be regenerated alone.
struct SplitMix64 {
    std::uint64_t state = 0;

    constexpr std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

// One avalanche round, used to derive per-stream sub-seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
    return SplitMix64{x}.next();
}

}  // namespace macc
