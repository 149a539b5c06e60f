#pragma once

#include <stdexcept>
#include <string>

namespace omegabound {

// Argument outside the mathematical domain of an operation (k > sieve limit, p not prime, n < 3, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A table would exceed the configured memory budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unknown bound or function identifier.
class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Scan mode not permitted for the requested bound.
class ModeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Corrupted, truncated or mismatched checkpoint.
class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace omegabound
