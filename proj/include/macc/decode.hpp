#pragma once

#include <map>

#include "macc/delivery.hpp"
#include "macc/placement.hpp"

namespace macc {

// Everything user k is allowed to read: the coded files found in its L
// caches (keyed by position; exactly one position is absent) plus the
// broadcast. Ephemeral view; the transcript must outlive it.
struct UserView {
    int user = 0;                     // k, 1-based
    std::map<int, BitString> coded;   // position -> F_j payload
    const Transcript* transcript = nullptr;
};

// Assemble user k's view from caches k .. wrap(k+L-1) only.
UserView build_user_view(int user, const CacheArray& caches, const Transcript& transcript);

// coded XOR (fold-XOR of received): with N-1 of the N constituents
// received, the result is the single missing subfile.
BitString peel(const BitString& coded, const std::vector<BitString>& received);

// Reconstruct the user's whole requested file, bit-exact. Per position:
// copy the subfile straight from the transcript when it was transmitted,
// otherwise peel it out of the accessible coded file. Keys off transcript
// content, so any valid delivery decodes, not just the canonical one.
// Throws UndecodableError if some needed subfile is neither transmitted
// nor peelable (impossible for transcripts from deliver).
BitString decode_user(const UserView& view);

}  // namespace macc
