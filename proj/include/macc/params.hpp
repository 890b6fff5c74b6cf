#pragma once

#include <cstdint>

#include "macc/rational.hpp"

namespace macc {

// Validated (N, K, L) triple with the derived per-cache figures.
// Constructed only through validate_params, so holding one means the
// scheme applies: (K-1)/L is an integer, N >= 2, 1 <= L <= K-1.
struct SystemParams {
    int file_count = 0;      // N
    int cache_count = 0;     // K, also the user count
    int access_span = 0;     // L consecutive caches per user
    int coded_per_cache = 0; // (K-1)/L coded files stored per cache
    Rational memory;         // (K-1)/(K*L) file units per cache, exact
    int subfile_bits = 0;    // size of one subfile

    // Set when N > K: the scheme still runs but its rate N-1 is no
    // better than transmitting everything (min(N,K) file units).
    bool rate_above_trivial = false;

    int file_bits() const { return cache_count * subfile_bits; }

    friend bool operator==(const SystemParams& a, const SystemParams& b) {
        return a.file_count == b.file_count && a.cache_count == b.cache_count &&
               a.access_span == b.access_span && a.subfile_bits == b.subfile_bits;
    }
};

// The gate: every pipeline entry point goes through here.
// Throws SchemeInapplicable when (K-1) mod L != 0, TooFewFiles when
// N < 2, ParamError for out-of-range K, L or subfile_bits.
SystemParams validate_params(int file_count, int cache_count, int access_span, int subfile_bits);

}  // namespace macc
