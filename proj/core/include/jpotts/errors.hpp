#pragma once

#include <stdexcept>
#include <string>

namespace jpotts {

// Base class for all numerical failures raised by this library.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Input outside an operation's documented domain.
struct DomainError : NumericError {
  explicit DomainError(const std::string& what) : NumericError(what) {}
};

// Evaluation requested at a pole.
struct PoleError : DomainError {
  explicit PoleError(const std::string& what) : DomainError(what) {}
};

// Evaluation requested on the branch cut of a closed form.
struct CutError : DomainError {
  explicit CutError(const std::string& what) : DomainError(what) {}
};

// Series argument outside the region of convergence.
struct DivergenceError : NumericError {
  explicit DivergenceError(const std::string& what) : NumericError(what) {}
};

// Iteration/term cap reached before the tail bound met the target.
struct ConvergenceError : NumericError {
  explicit ConvergenceError(const std::string& what) : NumericError(what) {}
};

// Requested grid exceeds the configured node budget.
struct BudgetError : NumericError {
  explicit BudgetError(const std::string& what) : NumericError(what) {}
};

// A Mahler integrand came too close to zero at a quadrature node.
struct ZeroOnTorusError : NumericError {
  explicit ZeroOnTorusError(const std::string& what) : NumericError(what) {}
};

// The numerically measured modular reflection relation failed to hold.
struct ReflectionError : NumericError {
  explicit ReflectionError(const std::string& what) : NumericError(what) {}
};

}  // namespace jpotts
