#pragma once

#include <stdexcept>
#include <string>

namespace stslab {

// Operand sizes disagree (qubit counts, matrix widths, region layouts).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A request exceeds a configured search or enumeration cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input is well-formed but violates a domain precondition (invalid code, non-logical operator, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace stslab
