#pragma once

#include <stdexcept>
#include <string>

namespace orbitnorm {

/// A precondition or invariant of an operation was violated by the caller.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed textual input (partition lists, flags).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A size exceeded a configured enumeration or oracle bound.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, int requested, int bound)
      : std::runtime_error(what + ": size " + std::to_string(requested) +
                           " exceeds bound " + std::to_string(bound)),
        requested_(requested),
        bound_(bound) {}

  int requested() const noexcept { return requested_; }
  int bound() const noexcept { return bound_; }

 private:
  int requested_;
  int bound_;
};

/// A pair handed to the classifier matched no family of the table of
/// minimal irreducible degenerations.
class NotMinimalIrreducible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace orbitnorm
