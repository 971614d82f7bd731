#pragma once

#include <stdexcept>

namespace sonc {

/// A value violates the invariant of a domain type (degenerate simplex, weights
/// that do not form a convex combination, malformed cover key, ...).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An argument lies outside the domain of an operation (nonpositive rate
/// constant, nonpositive coefficient, unsupported cover id, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace sonc
