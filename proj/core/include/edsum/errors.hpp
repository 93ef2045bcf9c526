#pragma once

#include <stdexcept>
#include <string>

namespace edsum {

/// Arguments outside an operation's domain (b <= 0, gcd != 1, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Q(a;b) requested for a pair with a + b even.
class UndefinedRationalPart : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An elliptic function was evaluated too close to its pole lattice.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A theta series cannot converge (|q| >= 1) or hit the term cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division by a prefactor that (nearly) vanishes, e.g. 1/3 - lambda/6 at tau = (+-1+i)/2.
class DivisionHazard : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace edsum
