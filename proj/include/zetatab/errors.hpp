#pragma once

#include <stdexcept>
#include <string>

namespace zetatab {

// Base class for every error raised by this library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation at a pole of the requested function (e.g. zeta at s = 1).
class PoleError : public Error {
  public:
    using Error::Error;
};

// Argument outside the documented domain of an operation.
class DomainError : public Error {
  public:
    using Error::Error;
};

// A series or tail expansion stopped improving before reaching the target.
class ConvergenceError : public Error {
  public:
    using Error::Error;
};

// A finite result could not be represented in double precision.
class OverflowError : public Error {
  public:
    using Error::Error;
};

// Integrand returned NaN/Inf at an interior quadrature node.
class NonFiniteIntegrand : public Error {
  public:
    using Error::Error;
};

// Identity id not present in the registry.
class UnknownIdentity : public Error {
  public:
    using Error::Error;
};

// Parameter point rejected by an identity's domain predicate.
class DomainViolation : public Error {
  public:
    using Error::Error;
};

// Every point of a sweep grid was filtered out by the domain predicate.
class EmptyGridAfterDomainFilter : public Error {
  public:
    using Error::Error;
};

}  // namespace zetatab
