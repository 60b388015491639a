#pragma once

#include <stdexcept>
#include <string>

namespace affsel {

// A link, receiver or transmitter that is not part of the instance.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A caller-supplied constant violates the instance (e.g. c too small).
class ConstraintError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exact enumeration would exceed the configured capacity.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exhaustive search refused because the instance is too large.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or invalid input file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A loop exceeded its termination guard.
class TerminationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace affsel
