#pragma once

#include <stdexcept>
#include <string>

namespace appart {

// Bad input: out-of-regime parameters, malformed partitions, unsupported types.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// An internal invariant that a theorem guarantees did not hold. Seeing one of
// these means the implementation (or the theorem) is wrong, not the input.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace appart
