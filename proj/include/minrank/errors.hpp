#pragma once

#include <stdexcept>
#include <string>

namespace minrank {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive sweep or enumeration would exceed its configured budget.
/// `budget_name` names the knob to raise (e.g. "beta-budget").
class SizeGuardExceeded : public Error {
 public:
  SizeGuardExceeded(std::string budget_name, const std::string& what)
      : Error(what), budget_name_(std::move(budget_name)) {}

  const std::string& budget_name() const noexcept { return budget_name_; }

 private:
  std::string budget_name_;
};

/// A problem instance violates the unicast-uniprior rules. The message lists
/// every violation, one per line.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The problem document could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

class OutDegreeViolation : public Error {
 public:
  using Error::Error;
};

class NotAUnicycle : public Error {
 public:
  using Error::Error;
};

class OverlappingUnicycles : public Error {
 public:
  using Error::Error;
};

/// The instance generator could not satisfy the demand profile.
class InfeasibleProfile : public Error {
 public:
  using Error::Error;
};

}  // namespace minrank
