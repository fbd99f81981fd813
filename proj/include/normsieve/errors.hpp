#pragma once

#include <stdexcept>
#include <string>

namespace normsieve {

// Invalid user input: malformed specs, degenerate families, violated preconditions.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A result that the mathematics rules out, e.g. a nonpositive sieve density.
// Seeing one means a bug, not bad input.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace normsieve
