#ifndef EVOALG_ERRORS_HPP
#define EVOALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace evoalg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input / value errors.
struct ParseError : Error {
  using Error::Error;
};
struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};
struct DenominatorZero : ParseError {
  DenominatorZero() : ParseError("denominator is zero") {}
};
struct DenominatorNotInvertible : ParseError {
  explicit DenominatorNotInvertible(const std::string& what) : ParseError(what) {}
};
struct MixedFields : Error {
  MixedFields() : Error("operands belong to different fields") {}
};
struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what = "dimension mismatch") : Error(what) {}
};

// Structural preconditions.
struct NotASubalgebra : Error {
  NotASubalgebra() : Error("subspace is not closed under multiplication") {}
};
struct NotAnIdeal : Error {
  NotAnIdeal() : Error("subspace is not an ideal") {}
};
struct NotTK : Error {
  NotTK() : Error("algebra is not solvable non-nilpotent with one-dimensional derived subalgebra") {}
};
struct NotFiniteField : Error {
  NotFiniteField() : Error("operation requires a prime field") {}
};
struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

// A provable identity failed at runtime; indicates an implementation bug.
struct TheoremViolation : Error {
  explicit TheoremViolation(const std::string& what) : Error(what) {}
};

}  // namespace evoalg

#endif
