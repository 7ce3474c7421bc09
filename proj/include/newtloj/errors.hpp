#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace newtloj {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input. `position` is a 0-based byte offset
/// into the parsed text, or npos when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position = npos)
      : Error(position == npos ? what : what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t position_;
};

/// Every term cancelled, or the input held no terms at all.
class EmptySupportError : public ParseError {
 public:
  EmptySupportError() : ParseError("empty support") {}
};

/// Vectors of different length, or a dimension outside {2, 3}.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Affinely dependent points where independent ones were required.
class DegeneracyError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A plane through lattice points has no strictly positive normal.
class NotInnerNormalError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// The input does not define an isolated singularity.
class NotIsolatedError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// The boundary contradicts the structure an isolated non-degenerate
/// singularity must have.
class MalformedBoundaryError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A face does not have its support concentrated on its vertices.
class NotVertexSupportedError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Some axis has no proximate face.
class NoProximateFaceError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Lattice arithmetic left the 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations disagree. Always a bug, or an input that
/// violates the standing assumptions.
class CrossCheckFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace newtloj
