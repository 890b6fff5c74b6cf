#include "macc/bits.hpp"

#include <cstring>

#include "macc/errors.hpp"

namespace macc {

namespace {

// Mask keeping the `used` high-order bits of a byte.
inline std::uint8_t head_mask(std::size_t used) {
    return used == 0 ? 0 : static_cast<std::uint8_t>(0xffu << (8 - used));
}

}  // namespace

BitString BitString::parse(std::string_view text) {
    BitString out(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1')
            out.set_bit(i, true);
        else if (text[i] != '0')
            throw ParamError("bit string literal may contain only '0' and '1'");
    }
    return out;
}

BitString BitString::from_bytes(const std::vector<std::uint8_t>& bytes, std::size_t bit_count) {
    if (bytes.size() != (bit_count + 7) / 8)
        throw SizeMismatch("byte count does not match declared bit count");
    const std::size_t tail = bit_count % 8;
    if (tail != 0 && (bytes.back() & static_cast<std::uint8_t>(~head_mask(tail))) != 0)
        throw SizeMismatch("padding bits of final byte must be zero");
    BitString out(bit_count);
    out.bytes_ = bytes;
    return out;
}

BitString BitString::random(std::size_t bit_count, SplitMix64& rng) {
    BitString out(bit_count);
    std::size_t i = 0;
    while (i < out.bytes_.size()) {
        std::uint64_t word = rng.next();
        for (int b = 7; b >= 0 && i < out.bytes_.size(); --b, ++i)
            out.bytes_[i] = static_cast<std::uint8_t>(word >> (8 * b));
    }
    const std::size_t tail = bit_count % 8;
    if (tail != 0) out.bytes_.back() &= head_mask(tail);
    return out;
}

bool BitString::bit(std::size_t i) const {
    return (bytes_[i / 8] >> (7 - i % 8)) & 1u;
}

void BitString::set_bit(std::size_t i, bool value) {
    const std::uint8_t mask = static_cast<std::uint8_t>(1u << (7 - i % 8));
    if (value)
        bytes_[i / 8] |= mask;
    else
        bytes_[i / 8] &= static_cast<std::uint8_t>(~mask);
}

BitString BitString::slice(std::size_t from, std::size_t count) const {
    if (from + count > bits_) throw SizeMismatch("slice range exceeds bit string");
    BitString out(count);
    if (from % 8 == 0) {
        std::memcpy(out.bytes_.data(), bytes_.data() + from / 8, out.bytes_.size());
        const std::size_t tail = count % 8;
        if (tail != 0) out.bytes_.back() &= head_mask(tail);
    } else {
        for (std::size_t i = 0; i < count; ++i) out.set_bit(i, bit(from + i));
    }
    return out;
}

void BitString::write(std::size_t at, const BitString& other) {
    if (at + other.bits_ > bits_) throw SizeMismatch("write range exceeds bit string");
    for (std::size_t i = 0; i < other.bits_; ++i) set_bit(at + i, other.bit(i));
}

void BitString::append(const BitString& other) {
    if (bits_ % 8 == 0) {
        bytes_.insert(bytes_.end(), other.bytes_.begin(), other.bytes_.end());
        bits_ += other.bits_;
    } else {
        const std::size_t at = bits_;
        bits_ += other.bits_;
        bytes_.resize((bits_ + 7) / 8);
        for (std::size_t i = 0; i < other.bits_; ++i) set_bit(at + i, other.bit(i));
    }
}

BitString& BitString::operator^=(const BitString& rhs) {
    if (bits_ != rhs.bits_) throw SizeMismatch("xor of bit strings with different lengths");
    for (std::size_t i = 0; i < bytes_.size(); ++i) bytes_[i] ^= rhs.bytes_[i];
    return *this;
}

std::string BitString::str() const {
    std::string out;
    out.reserve(bits_);
    for (std::size_t i = 0; i < bits_; ++i) out.push_back(bit(i) ? '1' : '0');
    return out;
}

}  // namespace macc
