#pragma once

#include <stdexcept>
#include <string>

namespace cherx {

struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroInverse : MathError {
  ZeroInverse() : MathError("inverse of zero") {}
};

struct SymbolicDenominatorZero : MathError {
  SymbolicDenominatorZero() : MathError("symbolic fraction with zero numerator cannot be inverted") {}
};

struct EvaluationPole : MathError {
  explicit EvaluationPole(const std::string& where)
      : MathError("denominator vanishes at the given parameter point: " + where) {}
};

struct InexactDivision : MathError {
  explicit InexactDivision(const std::string& what) : MathError("inexact division: " + what) {}
};

struct RankMismatch : MathError {
  RankMismatch() : MathError("matrix rank does not match the number of variables") {}
};

struct UnsupportedFamily : MathError {
  explicit UnsupportedFamily(const std::string& spec) : MathError("unsupported group family: " + spec) {}
};

struct OrderBoundExceeded : MathError {
  explicit OrderBoundExceeded(unsigned bound)
      : MathError("group order exceeds the configured bound " + std::to_string(bound)) {}
};

struct NotRealGroup : MathError {
  NotRealGroup() : MathError("operation requires a real reflection group") {}
};

struct NotHomogeneous : MathError {
  NotHomogeneous() : MathError("element is not homogeneous for the grading") {}
};

struct NotInvariant : MathError {
  NotInvariant() : MathError("polynomial is not invariant under the group") {}
};

struct NotRankOne : MathError {
  NotRankOne() : MathError("operation requires a rank-1 group") {}
};

struct NotStable : MathError {
  explicit NotStable(const std::string& witness)
      : MathError("subspace is not stable under the operator; witness: " + witness) {}
};

struct SyntaxError : std::runtime_error {
  size_t position;
  SyntaxError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

struct UnknownSymbol : SyntaxError {
  UnknownSymbol(const std::string& sym, size_t pos) : SyntaxError("unknown symbol '" + sym + "'", pos) {}
};

struct IndexOutOfRange : SyntaxError {
  IndexOutOfRange(const std::string& sym, size_t pos)
      : SyntaxError("index out of range in '" + sym + "'", pos) {}
};

}  // namespace cherx
