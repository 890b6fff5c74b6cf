#include <doctest.h>

#include <set>

#include "macc/cyclic.hpp"
#include "macc/io.hpp"
#include "macc/verify.hpp"

using namespace macc;

TEST_CASE("exhaustive run over two files and five caches is clean") {
    const SystemParams p = validate_params(2, 5, 2, 8);
    const VerificationReport r = verify_all_demands(p, 1, 100000);
    CHECK(r.coverage == Coverage::exhaustive);
    CHECK(r.demands_checked == 32);
    CHECK(r.failures.empty());
    CHECK(r.measured_rate == Rational(1));
    CHECK(r.measured_memory == Rational(2, 5));
    CHECK(r.oracle_checks == 32 * 5);
    CHECK(r.oracle_agreements == r.oracle_checks);
}

TEST_CASE("the L=K-1 point stores 1/K per cache") {
    const SystemParams p = validate_params(2, 3, 2, 8);
    const VerificationReport r = verify_all_demands(p, 1, 100000);
    CHECK(r.demands_checked == 8);
    CHECK(r.failures.empty());
    CHECK(r.measured_rate == Rational(1));
    CHECK(r.measured_memory == Rational(1, 3));
}

TEST_CASE("sampling kicks in over budget and still passes") {
    const SystemParams p = validate_params(3, 7, 3, 8);
    const VerificationReport r = verify_all_demands(p, 7, 500);
    CHECK(r.coverage == Coverage::sampled);
    CHECK(r.demands_checked == 500);
    CHECK(r.failures.empty());
    CHECK(r.measured_rate == Rational(2));
    CHECK(r.measured_memory == Rational(2, 7));
}

TEST_CASE("verification is robust to the other extra rule") {
    for (const auto& [files, caches, span] : std::vector<std::tuple<int, int, int>>{
             {3, 5, 2}, {4, 5, 4}, {3, 7, 3}}) {
        const SystemParams p = validate_params(files, caches, span, 8);
        const VerificationReport r = verify_all_demands(p, 9, 400, ExtraRule::largest);
        CHECK(r.failures.empty());
        CHECK(r.measured_rate == Rational(files - 1));
    }
}

TEST_CASE("memory audit is exact and uniform across caches") {
    const SystemParams p = validate_params(2, 9, 4, 8);
    const MemoryAudit audit = memory_audit(place(generate_store(p, 0)));
    REQUIRE(audit.per_cache.size() == 9);
    for (const Rational& m : audit.per_cache) CHECK(m == Rational(2, 9));
    CHECK(audit.max == Rational(2, 9));
}

TEST_CASE("oracle accepts delivered transcripts for every user") {
    const SystemParams p = validate_params(2, 5, 2, 8);
    const FileStore store = generate_store(p, 5);
    const CacheArray caches = place(store);
    const DemandVector d = {1, 2, 1, 2, 2};
    const Transcript t = deliver(d, store);
    for (int k = 1; k <= 5; ++k) CHECK(oracle_decodable(k, d, caches, t));
}

TEST_CASE("oracle flips when the forced entry for a user's blind spot vanishes") {
    const SystemParams p = validate_params(3, 5, 2, 8);
    const FileStore store = generate_store(p, 5);
    const CacheArray caches = place(store);
    const DemandVector d = {1, 2, 3, 1, 2};

    for (int j = 1; j <= 5; ++j) {
        Transcript t = deliver(d, store);
        std::erase_if(t.entries, [j](const TranscriptEntry& e) {
            return e.position == j && e.origin == EntryOrigin::forced;
        });
        const int blocked = mod_index(j + 1, 5);
        CHECK_FALSE(oracle_decodable(blocked, d, caches, t));
    }
}

TEST_CASE("oracle accepts the hand-listed three-file broadcast") {
    const SystemParams p = validate_params(3, 5, 2, 8);
    const FileStore store = generate_store(p, 5);
    const CacheArray caches = place(store);
    const DemandVector d = {1, 2, 3, 1, 2};
    const std::vector<std::pair<int, int>> labels = {{2, 1}, {1, 1}, {1, 3}, {2, 3}, {3, 2},
                                                     {2, 2}, {2, 4}, {1, 4}, {1, 5}, {2, 5}};
    Transcript t{p, d, {}};
    for (const auto& [n, j] : labels)
        t.entries.push_back({n, j, EntryOrigin::extra, store.subfile(n, j)});
    for (int k = 1; k <= 5; ++k) CHECK(oracle_decodable(k, d, caches, t));
}

TEST_CASE("sweep reports valid rows and skips the inapplicable") {
    const std::vector<SweepRow> rows =
        sweep({{2, 5, 2}, {2, 7, 3}, {2, 9, 4}, {2, 6, 4}, {1, 5, 2}}, 8, 0, 100000);
    REQUIRE(rows.size() == 5);

    CHECK(rows[0].valid);
    CHECK(rows[0].memory == Rational(2, 5));
    CHECK(rows[0].rate == Rational(1));
    CHECK(rows[0].failures == 0);

    CHECK(rows[1].memory == Rational(2, 7));
    CHECK(rows[2].memory == Rational(2, 9));

    CHECK_FALSE(rows[3].valid);
    CHECK(rows[3].skip_reason == "KL");
    CHECK_FALSE(rows[4].valid);
    CHECK(rows[4].skip_reason == "N");

    // the cache-free reference point rides along on every row
    for (const SweepRow& row : rows) {
        CHECK(row.trivial_memory == 0);
        CHECK(row.trivial_rate == std::min(row.file_count, row.cache_count));
    }
}

TEST_CASE("report failures stay sorted and sampling forces the structured demands") {
    // N > K: sampled run must include all-equal, cyclic and all-distinct.
    // With N=5, K=2 the space is 25 > budget 10.
    const SystemParams p = validate_params(5, 2, 1, 8);
    const VerificationReport r = verify_all_demands(p, 3, 10);
    CHECK(r.coverage == Coverage::sampled);
    CHECK(r.demands_checked == 10);
    CHECK(r.failures.empty());
    CHECK(r.measured_rate == Rational(4));  // N-1 even when above min(N,K)
}
