#include "macc/verify.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "macc/cyclic.hpp"
#include "macc/errors.hpp"
#include "macc/io.hpp"

namespace macc {

namespace {

// Incremental GF(2) row space over a packed bit representation.
class Gf2Span {
public:
    explicit Gf2Span(std::size_t dim) : words_((dim + 63) / 64) {}

    void add(std::vector<std::uint64_t> row) {
        if (!reduce(row)) return;  // dependent, nothing new
        pivots_.push_back(top_bit(row));
        rows_.push_back(std::move(row));
    }

    bool contains(std::vector<std::uint64_t> row) const { return !reduce(row); }

    std::size_t words() const { return words_; }

private:
    // XOR out every basis row whose pivot is set; true if anything is left.
    bool reduce(std::vector<std::uint64_t>& row) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::size_t p = pivots_[r];
            if (row[p / 64] >> (p % 64) & 1u)
                for (std::size_t w = 0; w < words_; ++w) row[w] ^= rows_[r][w];
        }
        for (std::uint64_t w : row)
            if (w != 0) return true;
        return false;
    }

    static std::size_t top_bit(const std::vector<std::uint64_t>& row) {
        for (std::size_t w = row.size(); w-- > 0;)
            if (row[w] != 0) return w * 64 + (63 - static_cast<std::size_t>(std::countl_zero(row[w])));
        return 0;
    }

    std::size_t words_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<std::size_t> pivots_;
};

// Saturating N^K, so huge demand spaces just read as "over budget".
std::uint64_t demand_space(int file_count, int cache_count) {
    std::uint64_t total = 1;
    for (int i = 0; i < cache_count; ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(file_count))
            return std::numeric_limits<std::uint64_t>::max();
        total *= static_cast<std::uint64_t>(file_count);
    }
    return total;
}

bool next_demand(DemandVector& d, int file_count) {
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i] < file_count) {
            ++d[i];
            std::fill(d.begin() + static_cast<std::ptrdiff_t>(i) + 1, d.end(), 1);
            return true;
        }
    }
    return false;
}

}  // namespace

bool oracle_decodable(int user, const DemandVector& demand, const CacheArray& caches,
                      const Transcript& transcript) {
    const SystemParams& p = caches.params;
    validate_demand(demand, p);
    const std::size_t dim = static_cast<std::size_t>(p.file_count) *
                            static_cast<std::size_t>(p.cache_count);
    // Symbol (n, j) lives at bit (n-1)*K + (j-1).
    const auto symbol = [&](int file, int position) {
        return static_cast<std::size_t>(file - 1) * static_cast<std::size_t>(p.cache_count) +
               static_cast<std::size_t>(position - 1);
    };

    Gf2Span span(dim);
    std::vector<std::uint64_t> row(span.words());
    const auto set_bit = [&](std::size_t b) { row[b / 64] |= std::uint64_t{1} << (b % 64); };

    for (int i = 0; i < p.access_span; ++i) {
        const int cache = mod_index(user + i, p.cache_count);
        for (const CodedFile& f : caches.contents[static_cast<std::size_t>(cache - 1)]) {
            std::fill(row.begin(), row.end(), 0);
            for (int n = 1; n <= p.file_count; ++n) set_bit(symbol(n, f.position));
            span.add(row);
        }
    }
    for (const TranscriptEntry& e : transcript.entries) {
        std::fill(row.begin(), row.end(), 0);
        set_bit(symbol(e.file, e.position));
        span.add(row);
    }

    const int want = demand[static_cast<std::size_t>(user - 1)];
    for (int j = 1; j <= p.cache_count; ++j) {
        std::fill(row.begin(), row.end(), 0);
        set_bit(symbol(want, j));
        if (!span.contains(row)) return false;
    }
    return true;
}

MemoryAudit memory_audit(const CacheArray& caches) {
    const SystemParams& p = caches.params;
    MemoryAudit audit;
    audit.per_cache.reserve(caches.contents.size());
    for (const std::vector<CodedFile>& cache : caches.contents) {
        std::int64_t stored_bits = 0;
        for (const CodedFile& f : cache) stored_bits += static_cast<std::int64_t>(f.payload.bit_size());
        const Rational units(stored_bits, static_cast<std::int64_t>(p.file_bits()));
        audit.per_cache.push_back(units);
        if (audit.max < units) audit.max = units;
    }
    return audit;
}

VerificationReport verify_all_demands(const SystemParams& params, std::uint64_t seed,
                                      std::uint64_t demand_budget, ExtraRule rule) {
    VerificationReport report;
    report.params = params;
    report.seed = seed;
    report.expected_rate = Rational(params.file_count - 1);
    report.expected_memory = params.memory;

    const FileStore store = generate_store(params, seed);
    const CacheArray caches = place(store);
    report.measured_memory = memory_audit(caches).max;

    const auto check_demand = [&](const DemandVector& demand) {
        ++report.demands_checked;
        const Transcript t = deliver(demand, store, rule);
        const Rational rate = rate_of(t);
        if (report.measured_rate < rate) report.measured_rate = rate;
        if (!(rate == report.expected_rate))
            report.failures.push_back({demand, 0, "transcript rate " + rate.str() +
                                                      " != " + report.expected_rate.str()});
        for (int k = 1; k <= params.cache_count; ++k) {
            bool decoded_ok = false;
            std::string what;
            try {
                const BitString got = decode_user(build_user_view(k, caches, t));
                const BitString& expect = store.files[static_cast<std::size_t>(demand[static_cast<std::size_t>(k - 1)] - 1)];
                decoded_ok = got == expect;
                if (!decoded_ok) what = "decoded payload differs from the stored file";
            } catch (const Error& e) {
                what = e.what();
            }
            const bool oracle_ok = oracle_decodable(k, demand, caches, t);
            ++report.oracle_checks;
            if (oracle_ok == decoded_ok) ++report.oracle_agreements;
            if (!decoded_ok)
                report.failures.push_back({demand, k, what});
            else if (!oracle_ok)
                report.failures.push_back({demand, k, "decoder succeeded but oracle says undecodable"});
        }
    };

    const std::uint64_t space = demand_space(params.file_count, params.cache_count);
    if (space <= demand_budget) {
        report.coverage = Coverage::exhaustive;
        DemandVector d(static_cast<std::size_t>(params.cache_count), 1);
        do {
            check_demand(d);
        } while (next_demand(d, params.file_count));
    } else {
        report.coverage = Coverage::sampled;
        std::vector<DemandVector> picks;
        // Structured worst-case candidates go in first; the rate bound is
        // a maximum over demands, so these are the likely edge cases.
        picks.emplace_back(static_cast<std::size_t>(params.cache_count), 1);
        DemandVector cyclic(static_cast<std::size_t>(params.cache_count));
        for (int k = 1; k <= params.cache_count; ++k)
            cyclic[static_cast<std::size_t>(k - 1)] = mod_index(k, params.file_count);
        picks.push_back(std::move(cyclic));
        if (params.file_count >= params.cache_count) {
            DemandVector distinct(static_cast<std::size_t>(params.cache_count));
            for (int k = 1; k <= params.cache_count; ++k) distinct[static_cast<std::size_t>(k - 1)] = k;
            picks.push_back(std::move(distinct));
        }
        SplitMix64 rng{seed};
        while (picks.size() < demand_budget) {
            DemandVector d(static_cast<std::size_t>(params.cache_count));
            for (int& entry : d)
                entry = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(params.file_count));
            picks.push_back(std::move(d));
        }
        for (const DemandVector& d : picks) check_demand(d);
    }

    std::sort(report.failures.begin(), report.failures.end(),
              [](const Failure& a, const Failure& b) {
                  if (a.demand != b.demand) return a.demand < b.demand;
                  return a.user < b.user;
              });
    return report;
}

std::vector<SweepRow> sweep(const std::vector<std::array<int, 3>>& grid, int subfile_bits,
                            std::uint64_t seed, std::uint64_t demand_budget) {
    std::vector<SweepRow> rows;
    rows.reserve(grid.size());
    for (const std::array<int, 3>& triple : grid) {
        SweepRow row;
        row.file_count = triple[0];
        row.cache_count = triple[1];
        row.access_span = triple[2];
        row.trivial_memory = 0;
        row.trivial_rate = std::min(triple[0], triple[1]);
        try {
            const SystemParams params = validate_params(triple[0], triple[1], triple[2], subfile_bits);
            const VerificationReport report = verify_all_demands(params, seed, demand_budget);
            row.valid = true;
            row.memory = report.measured_memory;
            row.rate = report.measured_rate;
            row.failures = report.failures.size();
        } catch (const SchemeInapplicable&) {
            row.skip_reason = "KL";
        } catch (const TooFewFiles&) {
            row.skip_reason = "N";
        } catch (const ParamError&) {
            row.skip_reason = "param";
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace macc
