#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mfc {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- grids and sampling ---
struct DegenerateInterval : Error { using Error::Error; };
struct TooFewPoints : Error { using Error::Error; };
struct PositivityViolation : Error { using Error::Error; };
struct NonFiniteValue : Error { using Error::Error; };
struct NotPositive : Error { using Error::Error; };
struct Overflow : Error { using Error::Error; };
struct GridTooCoarse : Error { using Error::Error; };

// --- operators ---
struct NonPositiveOrder : Error { using Error::Error; };
struct OrderOutOfRange : Error { using Error::Error; };

// --- expression parsing and evaluation ---
struct SyntaxError : Error {
    SyntaxError(std::size_t offset, const std::string& expected)
        : Error("syntax error at offset " + std::to_string(offset) +
                ": expected " + expected),
          offset(offset), expected(expected) {}
    std::size_t offset;
    std::string expected;
};
struct UnknownFunction : Error { using Error::Error; };
struct EvalDomainError : Error { using Error::Error; };

// --- reference values ---
struct PoleError : Error { using Error::Error; };
struct WrongSide : Error { using Error::Error; };

// --- verification suite ---
struct UnknownProperty : Error { using Error::Error; };

}  // namespace mfc
