#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hf {

// Base class for every error raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a symbol sequence fails homopolymer-free validation.
struct WordError : Error {
    enum class Kind { Empty, RepeatAt, OutOfRange };
    Kind kind;
    std::size_t index;  // offending position (0-based); 0 for Empty
    WordError(Kind k, std::size_t i, const std::string& msg) : Error(msg), kind(k), index(i) {}
};

struct LengthMismatch : Error {
    using Error::Error;
};

struct BadEll : Error {
    using Error::Error;
};

struct RadiusOutOfRange : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

struct EmptyDistance : Error {
    using Error::Error;
};

struct BadParameters : Error {
    using Error::Error;
};

struct NonpositiveAverage : Error {
    using Error::Error;
};

struct UnsupportedParameters : Error {
    using Error::Error;
};

struct UnsupportedRadius : Error {
    using Error::Error;
};

}  // namespace hf
