#pragma once

#include <stdexcept>
#include <string>

namespace icup {

/// Input outside the mathematical domain of an operation (negative power,
/// NaN, fraction outside [0, 1], ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input is well-formed but the operation does not apply to it, e.g. a
/// weak-regime scheme asked to run with aP < 1.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bad command-line or configuration input.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace icup
