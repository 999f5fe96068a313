#pragma once

#include <stdexcept>
#include <string>

namespace lpn {

/// Malformed or out-of-range input (dimension mismatch, eps outside (0, 1/2], ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested attack parameters cannot work for this (n, eps, N).
class InfeasiblePlan : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A stage would exceed its configured memory budget.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(std::string stage, const std::string& what)
      : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

}  // namespace lpn
