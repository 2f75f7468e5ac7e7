#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace planext {

// Bad user-supplied data: malformed files, invalid parameters, violated preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InputError(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// An audit or reduction whose hypothesis is not met by the input.
class InapplicableError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace planext
