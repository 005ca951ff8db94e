#ifndef DIVSUM_ERRORS_HPP
#define DIVSUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace divsum {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// Evaluation requested exactly at a pole.
struct PoleError : DomainError {
    using DomainError::DomainError;
};

// Invalid (a, k, variant) combination or malformed request.
struct SpecError : Error {
    using Error::Error;
};

// The requested accuracy cannot be certified at the working precision.
struct PrecisionError : Error {
    using Error::Error;
};

// Configuration violates a documented precondition (e.g. precision policy).
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace divsum

#endif
