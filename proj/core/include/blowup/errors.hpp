#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace blowup {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input: malformed weights, epsilon outside (0,1], unknown ids, ...
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An exact computation left the range of the 64-bit representation.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// A census or oracle request would exceed its configured work budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t projected)
      : Error(what), projected_(projected) {}
  std::uint64_t projected() const noexcept { return projected_; }

 private:
  std::uint64_t projected_;
};

// Input data that is syntactically or structurally inconsistent.
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace blowup
