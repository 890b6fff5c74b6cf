#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "macc/prng.hpp"

namespace macc {

// A bit string of arbitrary length, packed most-significant-bit-first
// within each byte. Unused low-order bits of the final byte are always
// zero, so byte-wise equality is bit-wise equality.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::size_t bit_count) : bits_(bit_count), bytes_((bit_count + 7) / 8) {}

    // Parse "0110..."; anything but '0'/'1' is rejected.
    static BitString parse(std::string_view text);

    // Adopt packed bytes. Throws SizeMismatch if the byte count is wrong
    // or a pad bit is set.
    static BitString from_bytes(const std::vector<std::uint8_t>& bytes, std::size_t bit_count);

    // Deterministic random payload from the given stream.
    static BitString random(std::size_t bit_count, SplitMix64& rng);

    std::size_t bit_size() const { return bits_; }
    bool empty() const { return bits_ == 0; }
    const std::vector<std::uint8_t>& bytes() const { return bytes_; }

    bool bit(std::size_t i) const;
    void set_bit(std::size_t i, bool value);

    // Bits [from, from + count), as their own BitString.
    BitString slice(std::size_t from, std::size_t count) const;

    // Overwrite bits [at, at + other.bit_size()) with `other`.
    void write(std::size_t at, const BitString& other);

    void append(const BitString& other);

    BitString& operator^=(const BitString& rhs);
    friend BitString operator^(BitString lhs, const BitString& rhs) {
        lhs ^= rhs;
        return lhs;
    }

    friend bool operator==(const BitString&, const BitString&) = default;

    std::string str() const;

private:
    std::size_t bits_ = 0;
    std::vector<std::uint8_t> bytes_;
};

}  // namespace macc
