#pragma once

#include <stdexcept>
#include <string>

namespace spinwreath {

// Raised for malformed input, unsatisfied preconditions and invalid configuration.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an internal consistency check detects a mathematical mismatch.
class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spinwreath
