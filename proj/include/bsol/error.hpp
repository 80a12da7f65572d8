#pragma once

#include <stdexcept>
#include <string>

namespace bsol {

// Bad input: malformed text, a state that violates its invariants, or an
// argument outside an operation's domain.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// An enumeration or analysis would exceed its configured state budget.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A condition that cannot happen on a correct implementation, e.g. an orbit
// that fails to repeat within its step bound on a finite state space.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bsol
