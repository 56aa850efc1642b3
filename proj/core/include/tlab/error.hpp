#pragma once

#include <stdexcept>
#include <string>

namespace tlab {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad arguments, unparseable files, unsupported dimensions.
/// Maps to CLI exit code 2.
class UsageError : public Error {
public:
    using Error::Error;
};

/// Input violates a domain rule, e.g. a configuration with overlapping balls
/// fed to an operation that requires a valid one. Maps to CLI exit code 3.
class DomainViolation : public Error {
public:
    using Error::Error;
};

/// A checked internal postcondition failed. Seeing this means a bug in the
/// geometry or search code, not bad user input. Maps to CLI exit code 4.
class InvariantBreach : public Error {
public:
    using Error::Error;
};

} // namespace tlab
