#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace groupeq {

/// Malformed input text. `position` is a 0-based byte offset into the parsed string.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), message_(what), position_(position) {}
  std::size_t position() const { return position_; }
  /// The message without the position suffix.
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

/// An operation was called on data outside its domain (singular system, non-metabelian group, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured search cap was exceeded.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace groupeq
