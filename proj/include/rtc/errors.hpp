// errors.hpp -- exception types shared across the toolkit.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rtc {

/// Two values built over different universes (or carriers) were combined.
struct UniverseMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A label was looked up that is not part of the universe.
struct UnknownLabelError : std::invalid_argument {
    explicit UnknownLabelError(const std::string& label)
        : std::invalid_argument("unknown element: " + label) {}
};

/// An exhaustive operation was asked for an input beyond its documented bound.
struct SizeGuardError : std::runtime_error {
    SizeGuardError(std::string operation, std::size_t bound, std::size_t actual)
        : std::runtime_error(operation + ": size " + std::to_string(actual) +
                             " exceeds bound " + std::to_string(bound)),
          operation(std::move(operation)), bound(bound), actual(actual) {}

    std::string operation;
    std::size_t bound;
    std::size_t actual;
};

/// Malformed textual input; `line` is 1-based, 0 when no line applies.
struct ParseError : std::runtime_error {
    ParseError(std::size_t line, const std::string& what_happened)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what_happened
                                  : what_happened),
          line(line) {}

    std::size_t line;
};

/// A fixed-point iteration failed to stabilize within its step cap.
struct StepCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace rtc
