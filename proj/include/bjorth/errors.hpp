#pragma once

#include <stdexcept>
#include <string>

namespace bjorth {

/// Malformed or inconsistent input (shape mismatch, non-finite entries, bad schema).
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative search ran out of budget before reaching its target.
class NumericalFailure : public std::runtime_error {
public:
  NumericalFailure(const std::string& what, double best_residual)
      : std::runtime_error(what), best_residual_(best_residual) {}

  double best_residual() const noexcept { return best_residual_; }

private:
  double best_residual_;
};

}  // namespace bjorth
