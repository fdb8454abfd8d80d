#pragma once

#include <stdexcept>
#include <string>

namespace nlr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in spaces of different dimension.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// An argument lies outside the domain of the operation (wrong subspace, m too small, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Principal matrix logarithm is not unique (rotation angle pi).
class BranchError : public Error {
public:
    using Error::Error;
};

/// Group element is not in the identity component of SO(1,m).
class NotOrthochronousError : public Error {
public:
    using Error::Error;
};

/// Malformed input file or command-line arguments.
class UsageError : public Error {
public:
    using Error::Error;
};

} // namespace nlr
