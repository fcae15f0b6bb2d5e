#pragma once

#include <stdexcept>
#include <string>

namespace hotspots {

// Invalid argument to a library call (negative order, dimension out of range, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument is valid in principle but outside the range an evaluator supports.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Malformed or rejected domain description (mask file, generator parameters).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An iterative or bracketing method did not produce a result.
class NumericalFailure : public std::runtime_error {
 public:
  NumericalFailure(const std::string& what, double last_residual = 0.0)
      : std::runtime_error(what), last_residual_(last_residual) {}

  double last_residual() const noexcept { return last_residual_; }

 private:
  double last_residual_;
};

}  // namespace hotspots
