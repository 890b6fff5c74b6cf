#include "macc/placement.hpp"

#include "macc/cyclic.hpp"
#include "macc/errors.hpp"

namespace macc {

CodedFile coded_file(int position, const FileStore& store) {
    const SystemParams& p = store.params;
    if (position < 1 || position > p.cache_count) throw ParamError("position out of range");
    BitString acc = store.subfile(1, position);
    for (int n = 2; n <= p.file_count; ++n) acc ^= store.subfile(n, position);
    return CodedFile{position, std::move(acc)};
}

std::vector<int> cache_content_indices(int cache, const SystemParams& params) {
    if (cache < 1 || cache > params.cache_count) throw ParamError("cache index out of range");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(params.coded_per_cache));
    for (int i = 0; i < params.coded_per_cache; ++i)
        out.push_back(mod_index(cache + static_cast<std::int64_t>(i) * params.access_span,
                                params.cache_count));
    return out;
}

CacheArray place(const FileStore& store) {
    const SystemParams& p = store.params;
    std::vector<CodedFile> coded;
    coded.reserve(static_cast<std::size_t>(p.cache_count));
    for (int j = 1; j <= p.cache_count; ++j) coded.push_back(coded_file(j, store));

    CacheArray caches{p, {}};
    caches.contents.reserve(static_cast<std::size_t>(p.cache_count));
    for (int k = 1; k <= p.cache_count; ++k) {
        std::vector<CodedFile> slot;
        slot.reserve(static_cast<std::size_t>(p.coded_per_cache));
        for (int j : cache_content_indices(k, p)) slot.push_back(coded[static_cast<std::size_t>(j - 1)]);
        caches.contents.push_back(std::move(slot));
    }
    return caches;
}

std::vector<int> accessible_coded_indices(int user, const SystemParams& params) {
    if (user < 1 || user > params.cache_count) throw ParamError("user index out of range");
    return cyclic_range(user, static_cast<std::int64_t>(user) + params.cache_count - 2,
                        params.cache_count);
}

}  // namespace macc
