#include "macc/delivery.hpp"

#include <algorithm>
#include <string>

#include "macc/cyclic.hpp"
#include "macc/errors.hpp"

namespace macc {

void validate_demand(const DemandVector& demand, const SystemParams& params) {
    if (demand.size() != static_cast<std::size_t>(params.cache_count))
        throw ParamError("demand vector needs " + std::to_string(params.cache_count) +
                         " entries, got " + std::to_string(demand.size()));
    for (int want : demand)
        if (want < 1 || want > params.file_count)
            throw ParamError("demand entry " + std::to_string(want) + " outside [1.." +
                             std::to_string(params.file_count) + "]");
}

int forced_file_index(int position, const DemandVector& demand, const SystemParams& params) {
    if (position < 1 || position > params.cache_count) throw ParamError("position out of range");
    const int blocked_user = mod_index(position + 1, params.cache_count);
    return demand[static_cast<std::size_t>(blocked_user - 1)];
}

std::vector<int> extra_set(int position, const DemandVector& demand, int file_count,
                           ExtraRule rule) {
    if (file_count < 2) throw TooFewFiles("delivery needs at least 2 files");
    const int K = static_cast<int>(demand.size());
    const int forced = demand[static_cast<std::size_t>(mod_index(position + 1, K) - 1)];

    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(file_count - 2));
    // Candidates are [1..N] minus the forced index; drop one more element
    // from the end the rule favors, keeping N-2 in ascending order.
    const int skipped = rule == ExtraRule::smallest ? (forced == file_count ? file_count - 1 : file_count)
                                                    : (forced == 1 ? 2 : 1);
    for (int n = 1; n <= file_count; ++n)
        if (n != forced && n != skipped) out.push_back(n);
    return out;
}

Transcript deliver(const DemandVector& demand, const FileStore& store, ExtraRule rule) {
    const SystemParams& p = store.params;
    validate_demand(demand, p);

    Transcript t{p, demand, {}};
    t.entries.reserve(static_cast<std::size_t>(p.cache_count) *
                      static_cast<std::size_t>(p.file_count - 1));
    for (int j = 1; j <= p.cache_count; ++j) {
        const int forced = forced_file_index(j, demand, p);
        t.entries.push_back({forced, j, EntryOrigin::forced, store.subfile(forced, j)});
        for (int n : extra_set(j, demand, p.file_count, rule))
            t.entries.push_back({n, j, EntryOrigin::extra, store.subfile(n, j)});
    }
    return t;
}

Rational rate_of(const Transcript& transcript) {
    const SystemParams& p = transcript.params;
    const std::size_t expected = static_cast<std::size_t>(p.cache_count) *
                                 static_cast<std::size_t>(p.file_count - 1);
    if (transcript.entries.size() != expected)
        throw IntegrityError("transcript holds " + std::to_string(transcript.entries.size()) +
                             " entries, delivery produces " + std::to_string(expected));
    return Rational(static_cast<std::int64_t>(transcript.entries.size()), p.cache_count);
}

}  // namespace macc
