#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "macc/decode.hpp"

namespace macc {

enum class Coverage {
    exhaustive,  // all N^K demand vectors were checked
    sampled,     // a seeded uniform sample plus fixed adversarial patterns
};

struct Failure {
    DemandVector demand;
    int user = 0;
    std::string what;
};

// Outcome of one harness run. Zero failures over an exhaustive run means
// zero-error decoding for every demand at these parameters.
struct VerificationReport {
    SystemParams params;
    std::uint64_t seed = 0;
    Coverage coverage = Coverage::exhaustive;
    std::uint64_t demands_checked = 0;
    std::vector<Failure> failures;  // sorted by demand vector, then user
    Rational measured_rate;         // worst case over checked demands
    Rational expected_rate;         // N-1
    Rational measured_memory;       // largest per-cache occupancy
    Rational expected_memory;       // (K-1)/(K*L)
    std::uint64_t oracle_checks = 0;
    std::uint64_t oracle_agreements = 0;

    bool ok() const { return failures.empty(); }
};

// Generate a seeded store, place, then for every checked demand run
// delivery and all K decoders, cross-checking each (demand, user) pair
// against the symbolic GF(2) oracle. Demands are enumerated exhaustively
// when N^K fits the budget, otherwise sampled (always force-including
// the all-equal, cyclic and, when N >= K, all-distinct patterns).
// Failures are data in the report, never exceptions.
VerificationReport verify_all_demands(const SystemParams& params, std::uint64_t seed,
                                      std::uint64_t demand_budget,
                                      ExtraRule rule = ExtraRule::smallest);

struct MemoryAudit {
    std::vector<Rational> per_cache;  // stored bits / (K*subfile_bits), exact
    Rational max;
};

MemoryAudit memory_audit(const CacheArray& caches);

// Independent decodability check. Treats every subfile as a formal GF(2)
// symbol: each coded file the user can reach contributes the row
// sum-of-all-files-at-its-position, each transcript entry a unit row.
// True iff all K unit symbols of the user's wanted file lie in the span.
// Never looks at payload bits, so a payload collision cannot mask a
// structural bug in the XOR machinery it audits.
bool oracle_decodable(int user, const DemandVector& demand, const CacheArray& caches,
                      const Transcript& transcript);

// One grid point of a rate-memory sweep. Invalid triples are reported
// as skipped, not fatal. The trivial cache-free reference point
// (memory 0, rate min(N,K)) rides along as a constant column.
struct SweepRow {
    int file_count = 0;
    int cache_count = 0;
    int access_span = 0;
    bool valid = false;
    std::string skip_reason;  // empty when valid
    Rational memory;          // measured, equals (K-1)/(K*L)
    Rational rate;            // measured, equals N-1
    std::uint64_t failures = 0;
    int trivial_memory = 0;
    int trivial_rate = 0;  // min(N, K)
};

std::vector<SweepRow> sweep(const std::vector<std::array<int, 3>>& grid, int subfile_bits,
                            std::uint64_t seed, std::uint64_t demand_budget);

}  // namespace macc
