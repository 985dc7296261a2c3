#pragma once

#include <stdexcept>
#include <string>

namespace mixdisc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments outside an operation's documented domain (p < 1, r <= 1/p, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Sampling grid too coarse to resolve the requested coefficient box.
class AliasingError : public Error {
 public:
  using Error::Error;
};

/// A series or bound requested in a regime where it does not converge.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// Integer overflow in exact arithmetic.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A verified precondition on the input data failed.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A ratio with a vanishing denominator was requested.
class UndefinedRatioError : public Error {
 public:
  using Error::Error;
};

}  // namespace mixdisc
