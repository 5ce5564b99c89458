#pragma once

#include <stdexcept>
#include <string>

namespace qlar {

// Malformed input: dimension mismatches, out-of-range indices, bad files.
class InstanceError : public std::runtime_error {
 public:
  explicit InstanceError(const std::string& what) : std::runtime_error(what) {}
};

// Problem too large for an exhaustive routine.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// A requested target cannot be met; carries the best achievable value.
class InfeasibleTargetError : public std::runtime_error {
 public:
  InfeasibleTargetError(const std::string& what, double max_achievable)
      : std::runtime_error(what), max_achievable_(max_achievable) {}
  double max_achievable() const { return max_achievable_; }

 private:
  double max_achievable_;
};

}  // namespace qlar
