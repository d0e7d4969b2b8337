#pragma once

#include <stdexcept>
#include <string>

namespace closedlab {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

/// Malformed input (bad morphism, bad directive sequence, parse failure).
struct ValidationError : Error {
    using Error::Error;
};

/// A configured size/length cap would be exceeded.
struct ResourceError : Error {
    using Error::Error;
};

/// A structural self-check failed; indicates a bug, not bad input.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace closedlab
