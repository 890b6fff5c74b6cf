#pragma once

#include <vector>

#include "macc/store.hpp"

namespace macc {

// Coded file F_j: the XOR over all N files of their subfile at position j.
struct CodedFile {
    int position = 0;  // j, 1-based
    BitString payload;
};

// The K filled caches. contents[k-1] is cache k, holding its
// (K-1)/L coded files in placement loop order. Immutable once built.
struct CacheArray {
    SystemParams params;
    std::vector<std::vector<CodedFile>> contents;
};

// XOR of the N subfiles at one position.
CodedFile coded_file(int position, const FileStore& store);

// The coded-file indices cache k stores: k, k+L, k+2L, ... wrapped,
// one step of L per slot, (K-1)/L slots. All distinct.
std::vector<int> cache_content_indices(int cache, const SystemParams& params);

// Cyclic placement: build every F_j once, then fill each cache.
// Deterministic; same store gives identical bits.
CacheArray place(const FileStore& store);

// The K-1 coded-file indices user k can reach through its L caches,
// in span order. The single absent index is the wrap of k-1.
std::vector<int> accessible_coded_indices(int user, const SystemParams& params);

}  // namespace macc
