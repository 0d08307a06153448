#pragma once

#include <stdexcept>
#include <string>

namespace u11 {

enum class Err {
  EvenResidualChar,
  EpsilonIsSquare,
  NonUnit,
  NotRational,
  PrecisionExceeded,
  BudgetExceeded,
  LevelTooLow,
  NotAbelian,
  TrueDepthTooBig,
  IncompatibleOnIntersection,
  NotSubgroup,
  GroupMismatch,
  BasisNotOrthonormal,
  ValuationViolation,
  DomainNotNormal,
  PreconditionViolated,
  SystemInconsistent,
  DepthTooLow,
  IrreducibilityFailed,
  DecompositionResidual,
  IdentificationFailed,
  ExpansionMismatch,
  NotRealizable,
  CacheCorrupt,
  Internal,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Err code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace u11
