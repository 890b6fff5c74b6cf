#pragma once

#include <cstdint>
#include <vector>

#include "macc/rational.hpp"
#include "macc/store.hpp"

namespace macc {

// d(1..K): which file each user wants, values in [1..N].
using DemandVector = std::vector<int>;

// Throws ParamError unless the vector has K entries, all in [1..N].
void validate_demand(const DemandVector& demand, const SystemParams& params);

enum class EntryOrigin : std::uint8_t {
    forced = 0,  // the per-position transmission serving the one user with no access to F_j
    extra = 1,   // one of the N-2 additional subfiles that open up peeling
};

// One broadcast item: plaintext subfile (file, position) with its payload.
// The labels are header metadata a real broadcast would carry.
struct TranscriptEntry {
    int file = 0;      // n
    int position = 0;  // j
    EntryOrigin origin = EntryOrigin::forced;
    BitString payload;
};

// The full broadcast for one demand vector: K*(N-1) plaintext subfiles,
// ordered by ascending position, forced entry first within a position.
struct Transcript {
    SystemParams params;
    DemandVector demand;
    std::vector<TranscriptEntry> entries;
};

// Which file index must be sent at position j: the demand of the one
// user that cannot access F_j, i.e. user wrap(j+1).
int forced_file_index(int position, const DemandVector& demand, const SystemParams& params);

// The choice of the N-2 additional file indices is arbitrary as far as
// decodability goes; these two canonical rules pin the bytes down and
// let the harness show the decoder does not depend on the choice.
enum class ExtraRule {
    smallest,  // lexicographically smallest admissible set (the default everywhere)
    largest,   // lexicographically largest, used by the verification harness
};

// The N-2 extra file indices at position j, ascending, never containing
// the forced index. Empty when N == 2.
std::vector<int> extra_set(int position, const DemandVector& demand, int file_count,
                           ExtraRule rule = ExtraRule::smallest);

// Run the delivery phase: for each position send the forced subfile,
// then the extras. Deterministic under a fixed rule.
Transcript deliver(const DemandVector& demand, const FileStore& store,
                   ExtraRule rule = ExtraRule::smallest);

// Broadcast size in file units; exactly N-1 for transcripts from
// deliver. Throws IntegrityError when the entry count is not K*(N-1).
Rational rate_of(const Transcript& transcript);

}  // namespace macc
