#pragma once

#include <stdexcept>
#include <string>

namespace prym {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: JSON, rational literals, polynomial strings, unknown ids.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Structurally invalid graph or cover (disconnected where connectivity is
/// required, broken harmonicity, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A computation was requested that is not defined for the given input,
/// e.g. the kernel volume route on a free cover.
class InapplicableError : public Error {
 public:
  using Error::Error;
};

/// Random generation parameters that cannot be satisfied.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold exactly did not (exact division failed, a
/// coordinate was not integral, ...). Signals a bug or an invalid cover.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace prym
