#pragma once

#include <stdexcept>
#include <string>

namespace zolab {

/// Base for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Precondition on the input domain violated (bad vertex, overlapping sets, ...).
struct DomainError : Error {
    using Error::Error;
};

/// An exponential operation was asked to exceed its configured cap.
struct CapExceededError : Error {
    using Error::Error;
};

/// Malformed textual input (edge lists, graph6, rationals, configs).
struct ParseError : Error {
    using Error::Error;
};

/// A checked strategy could not find a structure its rulebook requires.
/// Carries a precise description of the missing object; never guesses.
struct StrategyPreconditionError : Error {
    using Error::Error;
};

} // namespace zolab
