#pragma once

#include <stdexcept>
#include <string>

namespace nek {

// Caller supplied inconsistent arguments (arity mismatch, bad bounds, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mathematically undefined operation: division by zero, log of a series with
// constant term != 1, ...
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A denominator vanishes, either identically after a substitution or at an
// evaluation point. `factor()` is the rendered offending linear form.
class PoleError : public DomainError {
 public:
  PoleError(const std::string& what, std::string factor)
      : DomainError(what + ": " + factor), factor_(std::move(factor)) {}
  const std::string& factor() const noexcept { return factor_; }

 private:
  std::string factor_;
};

// An identity that must hold by construction failed, e.g. a pole at eps = 0
// in a quantity that is known to be regular there.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nek
