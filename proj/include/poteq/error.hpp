#pragma once

#include <stdexcept>
#include <string>

namespace poteq {

/// Base class of every error raised by the library. The CLI maps
/// `Anomaly` subclasses to exit code 2 and everything else to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Precondition or input-format violation.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A computed quantity contradicts a proven invariant (Hasse bound,
/// weight rigidity, ...). Never expected on valid inputs.
class Anomaly : public Error {
public:
    using Error::Error;
};

}  // namespace poteq
