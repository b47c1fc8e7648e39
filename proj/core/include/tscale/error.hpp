#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tscale {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Index out of range, inverted interval, malformed scale or partition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A factor 1 + mu*p vanished (or went nonpositive where positivity is required).
class RegressivityError : public DomainError {
 public:
  RegressivityError(const std::string& what, std::size_t index)
      : DomainError(what), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// A product left the representable double range.
class OverflowError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Structurally incomplete or inconsistent inputs to a bound computation.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Invalid scenario / scale / function descriptor.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace tscale
