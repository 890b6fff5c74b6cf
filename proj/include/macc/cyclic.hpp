#pragma once

#include <cstdint>
#include <vector>

#include "macc/errors.hpp"

namespace macc {

// Index algebra for the cyclic cache layout. Everything here is 1-based:
// valid indices live in [1..K] and the representative of 0 mod K is K,
// never 0. Negative inputs are resolved by their congruence class.
inline int mod_index(std::int64_t k, int cycle) {
    if (cycle < 1) throw ParamError("cycle length must be at least 1");
    std::int64_t r = k % cycle;
    if (r <= 0) r += cycle;
    return static_cast<int>(r);
}

// The wrapped span [a..b]: element i is the representative of a+i.
// Spans longer than the cycle would repeat indices; no caller needs
// that, so they are rejected.
inline std::vector<int> cyclic_range(std::int64_t a, std::int64_t b, int cycle) {
    if (b < a) throw ParamError("cyclic range end precedes start");
    if (b - a + 1 > cycle) throw ParamError("cyclic range longer than the cycle");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(b - a + 1));
    for (std::int64_t i = a; i <= b; ++i) out.push_back(mod_index(i, cycle));
    return out;
}

}  // namespace macc
