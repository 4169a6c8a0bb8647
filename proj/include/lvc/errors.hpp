#pragma once

#include <stdexcept>

namespace lvc {

/// Scenario or config input that cannot be parsed or violates a domain constraint.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A solver or optimizer failed to converge within its budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A theorem hypothesis or operation precondition does not hold.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lvc
