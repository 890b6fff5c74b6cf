#include "macc/io.hpp"

#include <algorithm>
#include <sstream>

#include "macc/cyclic.hpp"
#include "macc/errors.hpp"

namespace macc {

namespace {

constexpr char kCacheMagic[4] = {'M', 'A', 'C', 'C'};
constexpr char kTranscriptMagic[4] = {'M', 'A', 'C', 'X'};
constexpr std::uint8_t kFormatVersion = 1;

void put_u16(std::vector<std::uint8_t>& out, int value) {
    out.push_back(static_cast<std::uint8_t>(value >> 8 & 0xff));
    out.push_back(static_cast<std::uint8_t>(value & 0xff));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint64_t value) {
    for (int shift = 24; shift >= 0; shift -= 8)
        out.push_back(static_cast<std::uint8_t>(value >> shift & 0xff));
}

// Cursor over an input buffer; every failure names the byte it hit.
class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::size_t offset() const { return pos_; }
    bool exhausted() const { return pos_ == bytes_.size(); }

    std::uint8_t u8(const char* what) {
        need(1, what);
        return bytes_[pos_++];
    }

    int u16(const char* what) {
        need(2, what);
        const int v = bytes_[pos_] << 8 | bytes_[pos_ + 1];
        pos_ += 2;
        return v;
    }

    std::uint32_t u32(const char* what) {
        need(4, what);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v = v << 8 | bytes_[pos_ + static_cast<std::size_t>(i)];
        pos_ += 4;
        return v;
    }

    void magic(const char (&expect)[4], const char* kind) {
        need(4, "magic");
        for (std::size_t i = 0; i < 4; ++i)
            if (bytes_[pos_ + i] != static_cast<std::uint8_t>(expect[i]))
                throw ParseError(std::string("bad magic for ") + kind, pos_);
        pos_ += 4;
    }

    BitString payload(std::size_t bit_count) {
        const std::size_t byte_count = (bit_count + 7) / 8;
        need(byte_count, "payload");
        const std::size_t at = pos_;
        std::vector<std::uint8_t> raw(bytes_.begin() + static_cast<std::ptrdiff_t>(pos_),
                                      bytes_.begin() + static_cast<std::ptrdiff_t>(pos_ + byte_count));
        pos_ += byte_count;
        try {
            return BitString::from_bytes(raw, bit_count);
        } catch (const SizeMismatch& e) {
            throw ParseError(e.what(), at);
        }
    }

private:
    void need(std::size_t count, const char* what) const {
        if (pos_ + count > bytes_.size())
            throw ParseError(std::string("truncated stream reading ") + what, pos_);
    }

    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

void put_header(std::vector<std::uint8_t>& out, const char (&magic)[4], const SystemParams& p) {
    if (p.file_count > 0xffff || p.cache_count > 0xffff || p.access_span > 0xffff)
        throw IntegrityError("parameters exceed the 16-bit wire encoding");
    out.insert(out.end(), magic, magic + 4);
    out.push_back(kFormatVersion);
    put_u16(out, p.file_count);
    put_u16(out, p.cache_count);
    put_u16(out, p.access_span);
    put_u32(out, static_cast<std::uint64_t>(p.subfile_bits));
}

SystemParams read_header(Reader& in, const char (&magic)[4], const char* kind) {
    in.magic(magic, kind);
    const std::size_t at = in.offset();
    const std::uint8_t version = in.u8("version");
    if (version != kFormatVersion)
        throw ParseError("unsupported format version " + std::to_string(version), at);
    const int file_count = in.u16("file count");
    const int cache_count = in.u16("cache count");
    const int access_span = in.u16("access span");
    const std::uint32_t subfile_bits = in.u32("subfile bits");
    try {
        return validate_params(file_count, cache_count, access_span,
                               static_cast<int>(subfile_bits));
    } catch (const ParamError& e) {
        throw ParseError(std::string("header fails the parameter gate: ") + e.what(), at + 1);
    }
}

}  // namespace

BitString generate_subfile(const SystemParams& params, std::uint64_t seed, int file, int position) {
    const std::uint64_t stream = seed ^ mix64(static_cast<std::uint64_t>(file) << 32 |
                                              static_cast<std::uint64_t>(position));
    SplitMix64 rng{stream};
    return BitString::random(static_cast<std::size_t>(params.subfile_bits), rng);
}

FileStore generate_store(const SystemParams& params, std::uint64_t seed) {
    std::vector<BitString> files;
    files.reserve(static_cast<std::size_t>(params.file_count));
    for (int n = 1; n <= params.file_count; ++n) {
        BitString file;
        for (int j = 1; j <= params.cache_count; ++j) file.append(generate_subfile(params, seed, n, j));
        files.push_back(std::move(file));
    }
    return make_store(params, std::move(files));
}

std::uint64_t store_digest(const FileStore& store) {
    std::uint64_t h = 14695981039346656037ULL;
    const auto eat = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= v >> (8 * i) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    for (const BitString& f : store.files) {
        eat(f.bit_size());
        for (std::uint8_t b : f.bytes()) {
            h ^= b;
            h *= 1099511628211ULL;
        }
    }
    return h;
}

std::vector<std::uint8_t> serialize_caches(const CacheArray& caches) {
    std::vector<std::uint8_t> out;
    put_header(out, kCacheMagic, caches.params);
    for (const std::vector<CodedFile>& cache : caches.contents) {
        for (const CodedFile& f : cache) {
            put_u16(out, f.position);
            out.insert(out.end(), f.payload.bytes().begin(), f.payload.bytes().end());
        }
    }
    return out;
}

CacheArray deserialize_caches(std::span<const std::uint8_t> bytes) {
    Reader in(bytes);
    const SystemParams p = read_header(in, kCacheMagic, "cache image");

    CacheArray caches{p, {}};
    caches.contents.reserve(static_cast<std::size_t>(p.cache_count));
    for (int k = 1; k <= p.cache_count; ++k) {
        const std::vector<int> expect = cache_content_indices(k, p);
        std::vector<CodedFile> cache;
        cache.reserve(expect.size());
        for (int want : expect) {
            const std::size_t at = in.offset();
            const int j = in.u16("coded file position");
            if (j != want)
                throw ParseError("cache " + std::to_string(k) + " entry out of placement order: got " +
                                 std::to_string(j) + ", expected " + std::to_string(want), at);
            cache.push_back({j, in.payload(static_cast<std::size_t>(p.subfile_bits))});
        }
        caches.contents.push_back(std::move(cache));
    }
    if (!in.exhausted()) throw ParseError("trailing bytes after cache image", in.offset());
    return caches;
}

std::vector<std::uint8_t> serialize_transcript(const Transcript& transcript) {
    const SystemParams& p = transcript.params;
    if (p.file_count > 0xff)
        throw IntegrityError("transcript demand bytes cannot encode more than 255 files");
    validate_demand(transcript.demand, p);

    std::vector<std::uint8_t> out;
    put_header(out, kTranscriptMagic, p);
    for (int want : transcript.demand) out.push_back(static_cast<std::uint8_t>(want));
    put_u32(out, transcript.entries.size());
    for (const TranscriptEntry& e : transcript.entries) {
        put_u16(out, e.file);
        put_u16(out, e.position);
        out.push_back(static_cast<std::uint8_t>(e.origin));
        out.insert(out.end(), e.payload.bytes().begin(), e.payload.bytes().end());
    }
    return out;
}

Transcript deserialize_transcript(std::span<const std::uint8_t> bytes) {
    Reader in(bytes);
    const SystemParams p = read_header(in, kTranscriptMagic, "transcript");

    Transcript t{p, {}, {}};
    t.demand.reserve(static_cast<std::size_t>(p.cache_count));
    for (int k = 1; k <= p.cache_count; ++k) {
        const std::size_t at = in.offset();
        const int want = in.u8("demand entry");
        if (want < 1 || want > p.file_count) throw ParseError("demand out of range", at);
        t.demand.push_back(want);
    }

    const std::uint32_t count = in.u32("entry count");
    t.entries.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i) {
        TranscriptEntry e;
        std::size_t at = in.offset();
        e.file = in.u16("entry file index");
        if (e.file < 1 || e.file > p.file_count) throw ParseError("entry file index out of range", at);
        at = in.offset();
        e.position = in.u16("entry position");
        if (e.position < 1 || e.position > p.cache_count)
            throw ParseError("entry position out of range", at);
        at = in.offset();
        const std::uint8_t origin = in.u8("entry origin");
        if (origin > 1) throw ParseError("entry origin must be 0 (forced) or 1 (extra)", at);
        e.origin = static_cast<EntryOrigin>(origin);
        e.payload = in.payload(static_cast<std::size_t>(p.subfile_bits));
        t.entries.push_back(std::move(e));
    }
    if (!in.exhausted()) throw ParseError("trailing bytes after transcript", in.offset());
    return t;
}

std::string emit_sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "N,K,L,M_num,M_den,R_num,R_den,failures,status\n";
    for (const SweepRow& row : rows) {
        out << row.file_count << ',' << row.cache_count << ',' << row.access_span << ',';
        if (row.valid) {
            out << row.memory.num() << ',' << row.memory.den() << ',' << row.rate.num() << ','
                << row.rate.den() << ',' << row.failures << ','
                << (row.failures == 0 ? "ok" : "fail");
        } else {
            out << ",,,," << row.failures << ",skipped:" << row.skip_reason;
        }
        out << '\n';
    }
    return out.str();
}

std::string render_report(const VerificationReport& r) {
    std::ostringstream out;
    const SystemParams& p = r.params;
    out << "params: N=" << p.file_count << " K=" << p.cache_count << " L=" << p.access_span
        << " subfile_bits=" << p.subfile_bits << '\n';
    out << "seed: " << r.seed << '\n';
    if (r.coverage == Coverage::exhaustive)
        out << "coverage: exhaustive\n";
    else
        out << "coverage: sampled(seed=" << r.seed << ", count=" << r.demands_checked << ")\n";
    out << "demands_checked: " << r.demands_checked << '\n';
    out << "measured_rate: " << r.measured_rate.str() << '\n';
    out << "expected_rate: " << r.expected_rate.str() << '\n';
    out << "measured_memory: " << r.measured_memory.str() << '\n';
    out << "expected_memory: " << r.expected_memory.str() << '\n';
    out << "trivial_point: M=0 R=" << std::min(p.file_count, p.cache_count) << '\n';
    out << "oracle_checks: " << r.oracle_checks << '\n';
    out << "oracle_agreements: " << r.oracle_agreements << '\n';
    if (p.rate_above_trivial)
        out << "warning: N exceeds K, rate N-1 is no better than the trivial point\n";
    out << "failures: " << r.failures.size() << '\n';
    for (const Failure& f : r.failures) {
        out << "failure: d=(";
        for (std::size_t i = 0; i < f.demand.size(); ++i)
            out << (i == 0 ? "" : ",") << f.demand[i];
        out << ") user=" << f.user << " what=" << f.what << '\n';
    }
    out << "status: " << (r.ok() ? "ok" : "fail") << '\n';
    return out.str();
}

}  // namespace macc
