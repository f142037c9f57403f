#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lingloop {

// Base of all lingloop errors. The CLI maps IoError to exit code 1 and
// every other Error (malformed data, domain violations) to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class Utf8Error : public ValidationError {
 public:
  explicit Utf8Error(std::size_t byte_offset)
      : ValidationError("invalid utf-8 at byte " + std::to_string(byte_offset)),
        byte_offset_(byte_offset) {}

  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

}  // namespace lingloop
