#pragma once

#include <stdexcept>
#include <string>

namespace piw {

/// Malformed user input (permutations, group files, CLI arguments).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the mathematical arguments does not hold
/// (e.g. a subgroup that is not normal, a non-coprime action).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size limit was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed object contradicts a proved theorem. Always an implementation bug.
class TheoryViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The requested computation lies outside the supported scope.
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace piw
