#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace taut {

/// Precondition violated by caller-supplied data.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Expression text that does not conform to the grammar.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A presentation that is not available for the requested parameters.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedParity : public UnsupportedError {
 public:
  using UnsupportedError::UnsupportedError;
};

class UnsupportedCase : public UnsupportedError {
 public:
  using UnsupportedError::UnsupportedError;
};

/// A configured size or degree cap was exceeded. Never raised for silent truncation.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace taut
