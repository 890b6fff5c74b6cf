#include "macc/decode.hpp"

#include <string>

#include "macc/cyclic.hpp"
#include "macc/errors.hpp"

namespace macc {

UserView build_user_view(int user, const CacheArray& caches, const Transcript& transcript) {
    const SystemParams& p = caches.params;
    if (user < 1 || user > p.cache_count) throw ParamError("user index out of range");
    if (!(p == transcript.params))
        throw IntegrityError("cache array and transcript were built for different parameters");

    UserView view{user, {}, &transcript};
    for (int i = 0; i < p.access_span; ++i) {
        const int cache = mod_index(user + i, p.cache_count);
        for (const CodedFile& f : caches.contents[static_cast<std::size_t>(cache - 1)])
            view.coded.emplace(f.position, f.payload);
    }
    return view;
}

BitString peel(const BitString& coded, const std::vector<BitString>& received) {
    BitString out = coded;
    for (const BitString& r : received) out ^= r;
    return out;
}

BitString decode_user(const UserView& view) {
    const Transcript& t = *view.transcript;
    const SystemParams& p = t.params;
    validate_demand(t.demand, p);
    const int want = t.demand[static_cast<std::size_t>(view.user - 1)];
    const std::size_t width = static_cast<std::size_t>(p.subfile_bits);

    // First payload seen per (file, position); duplicates in a foreign
    // transcript are harmless, they just never get read twice.
    std::vector<const BitString*> seen(
        static_cast<std::size_t>(p.file_count) * static_cast<std::size_t>(p.cache_count), nullptr);
    const auto slot = [&](int file, int position) -> const BitString*& {
        return seen[static_cast<std::size_t>(file - 1) * static_cast<std::size_t>(p.cache_count) +
                    static_cast<std::size_t>(position - 1)];
    };
    for (const TranscriptEntry& e : t.entries) {
        if (e.file < 1 || e.file > p.file_count || e.position < 1 || e.position > p.cache_count)
            throw IntegrityError("transcript entry labels outside the parameter ranges");
        if (e.payload.bit_size() != width)
            throw IntegrityError("transcript entry payload is not one subfile long");
        if (slot(e.file, e.position) == nullptr) slot(e.file, e.position) = &e.payload;
    }

    BitString file(static_cast<std::size_t>(p.file_bits()));
    for (int j = 1; j <= p.cache_count; ++j) {
        // Direct pickup first: cheaper than peeling and identical in result.
        if (const BitString* direct = slot(want, j)) {
            file.write(static_cast<std::size_t>(j - 1) * width, *direct);
            continue;
        }

        const auto coded_it = view.coded.find(j);
        if (coded_it == view.coded.end())
            throw UndecodableError("user " + std::to_string(view.user) + " got no subfile of file " +
                                   std::to_string(want) + " at its inaccessible position " +
                                   std::to_string(j));

        // Cancel every other constituent out of F_j.
        BitString acc = coded_it->second;
        for (int n = 1; n <= p.file_count; ++n) {
            if (n == want) continue;
            const BitString* other = slot(n, j);
            if (other == nullptr)
                throw UndecodableError("user " + std::to_string(view.user) +
                                       " cannot peel position " + std::to_string(j) +
                                       ": subfile of file " + std::to_string(n) +
                                       " was never transmitted");
            acc ^= *other;
        }
        file.write(static_cast<std::size_t>(j - 1) * width, acc);
    }
    return file;
}

}  // namespace macc
