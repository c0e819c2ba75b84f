#pragma once

#include <stdexcept>
#include <string>

namespace detconv {

// Malformed or inconsistent caller input: arity/shape mismatches, bad JSON,
// polynomials that violate an operation's precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive enumeration would exceed the configured group-size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mathematically degenerate input (singular matrix where an inverse is needed).
class DegenerateInput : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace detconv
