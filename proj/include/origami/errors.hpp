#pragma once

#include <stdexcept>
#include <string>

namespace origami {

/// Base class for every error raised by the kernel.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input violates a geometric precondition (coincident points, vanishing
/// prefactor, point off its line, ...).
class DegenerateInput : public Error {
public:
    using Error::Error;
};

/// Parameter outside the documented domain (x ∉ [0,1], alpha ∉ (0, π/2), ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Leading coefficient vanishes.
class NotCubic : public Error {
public:
    using Error::Error;
};

/// A name requested by a caller is not present.
class UnknownName : public Error {
public:
    using Error::Error;
};

/// A post-condition residual check failed.
class ResidualFailure : public Error {
public:
    using Error::Error;
};

}  // namespace origami
