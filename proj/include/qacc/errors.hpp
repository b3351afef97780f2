#pragma once

#include <stdexcept>
#include <string>

namespace qacc {

// Every numerical entry point reports failure through one of these. The CLI
// maps each class onto a distinct exit status (see cli.hpp).

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Configuration puts part of the cavity or trajectory beyond the Rindler
/// horizon (a·L ≥ 2, or |t| ≥ 1/a on the inertial worldline).
class HorizonError : public DomainError {
 public:
  explicit HorizonError(const std::string& what) : DomainError(what) {}
};

/// Measured probability outside the range a reference curve attains.
class OutOfRangeError : public DomainError {
 public:
  explicit OutOfRangeError(const std::string& what) : DomainError(what) {}
};

/// Pole of the gamma function.
class PoleError : public DomainError {
 public:
  explicit PoleError(const std::string& what) : DomainError(what) {}
};

/// A series, quadrature or root scan did not reach its tolerance within its
/// work cap.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Bad command line or configuration file.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace qacc
