#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gvkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. `offset` is the byte position of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Well-formed input that violates a documented precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Exact arithmetic exceeded the configured degree guard.
class DegreeLimitError : public Error {
 public:
  using Error::Error;
};

// Two independent computations disagreed. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace gvkit
