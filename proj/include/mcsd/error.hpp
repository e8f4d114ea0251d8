#pragma once

#include <stdexcept>
#include <string>

namespace mcsd {

// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// The antisymmetric superposition at p = 1 has a divergent normalization.
// Callers must switch to the Werner-limit operations instead.
class LimitRequiredError : public DomainError {
 public:
  explicit LimitRequiredError(const std::string& what) : DomainError(what) {}
};

// A numerical procedure failed to converge.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mcsd
