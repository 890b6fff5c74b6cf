#pragma once

#include <vector>

#include "macc/bits.hpp"
#include "macc/params.hpp"

namespace macc {

// The server's N files. Each file is one bit string of K*subfile_bits
// bits; subfile (n, j) is the j-th contiguous block of file n.
struct FileStore {
    SystemParams params;
    std::vector<BitString> files;  // files[n-1], n in [1..N]

    // Subfile of file n at position j, both 1-based.
    BitString subfile(int file, int position) const;
};

// Split one file payload into its K equal subfiles. The payload must be
// exactly K*subfile_bits long; padding is a CLI concern, not handled here.
std::vector<BitString> split_file(const BitString& payload, const SystemParams& params);

// Assemble a store from raw file payloads, checking every length.
FileStore make_store(const SystemParams& params, std::vector<BitString> files);

}  // namespace macc
