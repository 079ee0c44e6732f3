#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace opf {

/// Base class for every recoverable error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed term text. Carries the byte offset where parsing stopped.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A request exceeded a configured size bound (arity, order, ...).
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace opf
