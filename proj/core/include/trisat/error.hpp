#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace trisat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates a documented precondition (inadmissible rank,
/// non-hyperbolic triple, composite modulus, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed its configured budget. Nothing is
/// approximated; the caller has to raise the budget or shrink the input.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t budget, std::uint64_t requested)
      : Error(what), budget_(budget), requested_(requested) {}

  std::uint64_t budget() const noexcept { return budget_; }
  std::uint64_t requested() const noexcept { return requested_; }

 private:
  std::uint64_t budget_;
  std::uint64_t requested_;
};

}  // namespace trisat
