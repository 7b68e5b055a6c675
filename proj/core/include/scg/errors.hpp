#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace scg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed instance/solution text. `line` is 1-based, 0 when unknown;
/// `field` is a JSON-pointer-like path ("follower_costs[2][0]").
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string field = {}, int line = 0);

  const std::string& field() const noexcept { return field_; }
  int line() const noexcept { return line_; }

 private:
  std::string field_;
  int line_;
};

/// Exhaustive enumeration would exceed the configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(double estimate, std::uint64_t cap);

  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

/// Best-response dynamics did not converge within its step budget.
class StepBudgetExhausted : public Error {
 public:
  using Error::Error;
};

/// A cooperative deadline expired before the solver produced a result.
class TimeLimitReached : public Error {
 public:
  using Error::Error;
};

/// The instance does not satisfy a solver's structural precondition.
class InapplicableSolver : public Error {
 public:
  using Error::Error;
};

}  // namespace scg
