#pragma once

#include <stdexcept>
#include <string>

namespace skewgal {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a decision procedure leaves its decidable class; never a guess.
struct Inconclusive : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::size_t pos;
    std::string expected;
    ParseError(std::size_t p, const std::string& msg, std::string exp = {})
        : Error(msg + " (at position " + std::to_string(p) + ")"),
          pos(p),
          expected(std::move(exp)) {}
};

} // namespace skewgal
