#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace oddaut {

enum class ErrorKind {
  // group-core
  NotAGroup,
  InvalidParameter,
  OrderCapExceeded,
  NotAnAction,
  NotNormal,
  // structure / abelian-tools
  PrimeDoesNotDivide,
  NotOddOrder,
  TrivialGroup,
  IsElementaryAbelian,
  NotAbelian,
  SearchBudgetExceeded,
  // linalg-fp
  NotInvertible,
  NotCoprime,
  NotCommuting,
  NotIrreducible,
  ConditionViolated,
  // aut-engine
  BudgetExceeded,
  // involution-extender
  NotElementaryAbelian,
  ActionNotCoprime,
  NoCentralSolution,
  NoSolution,
  NonUniqueSolution,
  TrivialAction,
  HypothesisViolated,
  NotTrivialOnIntersection,
  DoesNotCommuteWithAction,
  NotWellDefined,
  ExponentTwo,
  // case-analysis / catalog-cli
  RuleSetIncomplete,
  ParseError,
  // an internal postcondition check failed
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so that the CLI can
/// map it onto an exit code and tests can match on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) fail(kind, message);
}

}  // namespace oddaut
