#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kronav {

/// Every failure the library can raise. The CLI maps these onto stable exit codes.
enum class Errc {
  Validation,
  ReducibleMinPoly,
  EmptyOrAmbiguousRootInterval,
  ImageNotInE,
  RankDeficient,
  ClosedFormMismatch,
  RankCapExceeded,
  NotFoundWithinRadius,
  CannotWitnessNonvanishing,
  LatticeInZeroLocus,
  GridExhaustedAtPrecisionCap,
  NoProperSublattice,
  DependentForms,
  ZeroTheta,
  DegreeExceedsEll,
  SearchExhausted,
  BoundaryIndeterminate,
  PrecisionCap,
  CapExceeded,
  BoundViolation,
  NonIntegerDPrime,
  PreconditionViolation,
  Internal,
};

std::string_view errc_name(Errc code);

/// Process exit code for an error class: 2 validation, 3 independence,
/// 4 precision or search cap, 5 internal bound violation.
int exit_code(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace kronav
