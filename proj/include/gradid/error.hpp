#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gradid {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position` is a byte offset into the parsed text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A value that does not belong to its context: element outside its group,
/// mixed fields, index out of range.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside the hypotheses it is valid for.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace gradid
