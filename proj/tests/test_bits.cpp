#include <doctest.h>

#include "macc/bits.hpp"
#include "macc/errors.hpp"

using namespace macc;

TEST_CASE("bits pack MSB-first with zero padding") {
    const BitString b = BitString::parse("1011");
    CHECK(b.bit_size() == 4);
    CHECK(b.bytes() == std::vector<std::uint8_t>{0xb0});
    CHECK(b.str() == "1011");

    const BitString c = BitString::parse("100000001");  // 9 bits
    CHECK(c.bytes() == std::vector<std::uint8_t>{0x80, 0x80});
}

TEST_CASE("from_bytes round-trips and rejects dirty padding") {
    const BitString b = BitString::parse("1011");
    CHECK(BitString::from_bytes(b.bytes(), 4) == b);
    CHECK_THROWS_AS(BitString::from_bytes({0xb1}, 4), SizeMismatch);  // pad bit set
    CHECK_THROWS_AS(BitString::from_bytes({0xb0, 0x00}, 4), SizeMismatch);
}

TEST_CASE("xor is bitwise and length-checked") {
    CHECK((BitString::parse("1100") ^ BitString::parse("1010")) == BitString::parse("0110"));
    CHECK_THROWS_AS(BitString::parse("110") ^ BitString::parse("1100"), SizeMismatch);
}

TEST_CASE("slice and append invert each other at any alignment") {
    SplitMix64 rng{7};
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t total = 1 + rng.next() % 90;
        const BitString whole = BitString::random(total, rng);
        const std::size_t cut = rng.next() % (total + 1);
        BitString joined = whole.slice(0, cut);
        joined.append(whole.slice(cut, total - cut));
        CHECK(joined == whole);
    }
}

TEST_CASE("slice rejects out-of-range requests") {
    const BitString b = BitString::parse("10110");
    CHECK_THROWS_AS(b.slice(2, 4), SizeMismatch);
    CHECK(b.slice(2, 3) == BitString::parse("110"));
}

TEST_CASE("random payloads are deterministic per stream") {
    SplitMix64 a{123}, b{123}, c{124};
    CHECK(BitString::random(77, a) == BitString::random(77, b));
    SplitMix64 a2{123};
    CHECK(BitString::random(77, a2) != BitString::random(77, c));
}
