#include "macc/params.hpp"

#include <string>

#include "macc/errors.hpp"

namespace macc {

SystemParams validate_params(int file_count, int cache_count, int access_span, int subfile_bits) {
    if (cache_count < 2)
        throw ParamError("cache count must be at least 2, got " + std::to_string(cache_count));
    if (access_span < 1 || access_span > cache_count - 1)
        throw ParamError("access span must lie in [1, " + std::to_string(cache_count - 1) +
                         "], got " + std::to_string(access_span));
    if ((cache_count - 1) % access_span != 0)
        throw SchemeInapplicable("scheme needs (K-1)/L integral: (" + std::to_string(cache_count) +
                                 "-1)/" + std::to_string(access_span) + " is not an integer");
    if (file_count < 2)
        throw TooFewFiles("need at least 2 files, got " + std::to_string(file_count));
    if (subfile_bits < 1)
        throw ParamError("subfile size must be at least 1 bit, got " + std::to_string(subfile_bits));

    SystemParams p;
    p.file_count = file_count;
    p.cache_count = cache_count;
    p.access_span = access_span;
    p.coded_per_cache = (cache_count - 1) / access_span;
    p.memory = Rational(cache_count - 1, static_cast<std::int64_t>(cache_count) * access_span);
    p.subfile_bits = subfile_bits;
    p.rate_above_trivial = file_count > cache_count;
    return p;
}

}  // namespace macc
