#pragma once

#include <stdexcept>
#include <string>

namespace frobpush {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter violates an operation's precondition.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// The inputs are valid but outside the regime where a closed form holds.
class OutOfRegime : public Error {
 public:
  using Error::Error;
};

/// A class or decomposition was combined with one from a different lattice.
class LatticeMismatch : public Error {
 public:
  using Error::Error;
};

/// The operation is not defined for this kind of input
/// (ranks of support-only data, determinants of spinor summands, ...).
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// remove_trivial was asked to split off a trivial summand that is absent.
class NotFSplit : public Error {
 public:
  using Error::Error;
};

}  // namespace frobpush
