#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace macc {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside its documented range (bad K, L out of [1, K-1], span reversed, ...).
struct ParamError : Error {
    using Error::Error;
};

// The scheme's validity gate failed: (K-1)/L is not an integer.
struct SchemeInapplicable : ParamError {
    using ParamError::ParamError;
};

// Fewer than two files; the delivery rule needs N-2 >= 0.
struct TooFewFiles : ParamError {
    using ParamError::ParamError;
};

// Payload length does not match what the operation requires.
struct SizeMismatch : Error {
    using Error::Error;
};

// Structurally broken artifact (entry count wrong, inconsistent params).
struct IntegrityError : Error {
    using Error::Error;
};

// A user cannot reconstruct a needed subfile from caches plus transcript.
struct UndecodableError : Error {
    using Error::Error;
};

// Malformed byte stream; carries the offset of the first bad byte.
struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& what, std::size_t byte_offset)
        : Error(what + " at offset " + std::to_string(byte_offset)), offset(byte_offset) {}
};

}  // namespace macc
