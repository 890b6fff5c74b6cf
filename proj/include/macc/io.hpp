#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "macc/verify.hpp"

namespace macc {

// Deterministic store: subfile (n, j) comes from its own derived stream
// seed ^ mix64(n, j), so any single subfile can be regenerated alone.
BitString generate_subfile(const SystemParams& params, std::uint64_t seed, int file, int position);
FileStore generate_store(const SystemParams& params, std::uint64_t seed);

// FNV-1a over the packed file payloads; pins golden stores in tests.
std::uint64_t store_digest(const FileStore& store);

// Binary formats. All multi-byte integers big-endian; payloads are
// packed MSB-first with zero padding in the final byte. Deserializers
// validate magic, version, parameter gate and structural invariants,
// throwing ParseError with the offending byte offset.
//
// cache image:  "MACC" ver(1B) N(u16) K(u16) L(u16) subfile_bits(u32)
//               then K cache blocks of (K-1)/L entries {j(u16) payload}
// transcript:   "MACX" ver(1B) N(u16) K(u16) L(u16) subfile_bits(u32)
//               demand(K bytes) count(u32) entries {n(u16) j(u16)
//               origin(1B: 0 forced, 1 extra) payload}
//
// A transcript's entry count is K*(N-1) when produced by deliver; foreign
// counts parse fine and are judged by the decoder, not the parser.
std::vector<std::uint8_t> serialize_caches(const CacheArray& caches);
CacheArray deserialize_caches(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> serialize_transcript(const Transcript& transcript);
Transcript deserialize_transcript(std::span<const std::uint8_t> bytes);

// CSV for sweep rows: exact rationals as numerator/denominator columns,
// no floats. Header: N,K,L,M_num,M_den,R_num,R_den,failures,status
std::string emit_sweep_csv(const std::vector<SweepRow>& rows);

// Stable "key: value" lines; one "failure:" line per failing pair.
std::string render_report(const VerificationReport& report);

}  // namespace macc
