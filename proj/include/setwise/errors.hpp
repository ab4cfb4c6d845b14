#pragma once

#include <stdexcept>
#include <string>

namespace setwise {

/// Base class for every error the library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or mismatched input (bad partition text, n mismatch, violated precondition).
class InputError : public Error {
public:
    using Error::Error;
};

/// Parameters outside the regime where an operation is defined (e.g. n <= 2t).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Request exceeds a documented computational ceiling.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// Broken internal invariant. Seeing one of these means a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace setwise
