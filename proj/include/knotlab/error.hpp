#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace knotlab {

/// Any failure reported by a knotlab operation on well-formed calls.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `position()` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Input is well-formed but the operation does not apply to it
/// (unvalidated diagram, link instead of knot, inapplicable move, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagree.
/// This always indicates a bug and is never resolved silently.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace knotlab
