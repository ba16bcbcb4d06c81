#pragma once

#include <stdexcept>
#include <string>

namespace qpadic {

/// Input outside the mathematical domain of an operation (bad prime, q outside
/// the convergence disk, s = 1 pole, p | a, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Not enough p-adic precision to certify a result: division by a value that
/// is indistinguishable from zero, or a truncation that cannot reach the
/// requested number of digits.
class PrecisionError : public std::runtime_error {
 public:
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

/// A series that the implementation refuses to sum because termwise
/// convergence could not be established.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qpadic
