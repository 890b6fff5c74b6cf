#include "macc/store.hpp"

#include <string>

#include "macc/errors.hpp"

namespace macc {

BitString FileStore::subfile(int file, int position) const {
    if (file < 1 || file > params.file_count) throw ParamError("file index out of range");
    if (position < 1 || position > params.cache_count) throw ParamError("position out of range");
    const std::size_t width = static_cast<std::size_t>(params.subfile_bits);
    return files[static_cast<std::size_t>(file - 1)].slice(static_cast<std::size_t>(position - 1) * width, width);
}

std::vector<BitString> split_file(const BitString& payload, const SystemParams& params) {
    const std::size_t expected = static_cast<std::size_t>(params.file_bits());
    if (payload.bit_size() != expected)
        throw SizeMismatch("file payload must be exactly " + std::to_string(expected) +
                           " bits, got " + std::to_string(payload.bit_size()));
    std::vector<BitString> out;
    out.reserve(static_cast<std::size_t>(params.cache_count));
    const std::size_t width = static_cast<std::size_t>(params.subfile_bits);
    for (int j = 0; j < params.cache_count; ++j)
        out.push_back(payload.slice(static_cast<std::size_t>(j) * width, width));
    return out;
}

FileStore make_store(const SystemParams& params, std::vector<BitString> files) {
    if (files.size() != static_cast<std::size_t>(params.file_count))
        throw SizeMismatch("store needs exactly " + std::to_string(params.file_count) + " files");
    for (const BitString& f : files)
        if (f.bit_size() != static_cast<std::size_t>(params.file_bits()))
            throw SizeMismatch("every file must be " + std::to_string(params.file_bits()) + " bits");
    return FileStore{params, std::move(files)};
}

}  // namespace macc
