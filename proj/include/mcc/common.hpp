#ifndef MCC_COMMON_HPP
#define MCC_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mcc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid alphabet / cumulative model construction.
struct ModelError : Error {
    using Error::Error;
};

// Input word cannot be encoded (unknown symbol, interior EOF, precision exhausted).
struct EncodeError : Error {
    using Error::Error;
};

// Bit sequence inconsistent with any word, malformed constrained input, etc.
struct DecodeError : Error {
    using Error::Error;
};

struct CalibrationError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

// Symbols are referred to by index into their alphabet everywhere below;
// the string spelling only matters at the I/O boundary.
using Symbol = std::uint32_t;

} // namespace mcc

#endif
