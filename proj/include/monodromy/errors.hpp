#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monodromy {

// Malformed textual input. Carries the byte offset of the offending character.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        message_(message),
        position_(position) {}

  const std::string& message() const { return message_; }
  std::size_t position() const { return position_; }

private:
  std::string message_;
  std::size_t position_;
};

// A configured resource bound was exceeded. Says nothing about the
// underlying object; enumeration may simply not have finished.
class capacity_error : public std::runtime_error {
public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input that violates a mathematical precondition.
class domain_error : public std::runtime_error {
public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed. Indicates a bug, not bad input.
class consistency_error : public std::runtime_error {
public:
  explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace monodromy
