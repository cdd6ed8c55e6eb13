#pragma once

#include <stdexcept>
#include <string>

namespace planar {

/// A computation rejected its input (level mismatch, index out of range,
/// invalid tangle, guard exceeded).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input.
class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace planar
