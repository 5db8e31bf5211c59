#include "kronav/error.hpp"

namespace kronav {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::Validation: return "Validation";
    case Errc::ReducibleMinPoly: return "ReducibleMinPoly";
    case Errc::EmptyOrAmbiguousRootInterval: return "EmptyOrAmbiguousRootInterval";
    case Errc::ImageNotInE: return "ImageNotInE";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::ClosedFormMismatch: return "ClosedFormMismatch";
    case Errc::RankCapExceeded: return "RankCapExceeded";
    case Errc::NotFoundWithinRadius: return "NotFoundWithinRadius";
    case Errc::CannotWitnessNonvanishing: return "CannotWitnessNonvanishing";
    case Errc::LatticeInZeroLocus: return "LatticeInZeroLocus";
    case Errc::GridExhaustedAtPrecisionCap: return "GridExhaustedAtPrecisionCap";
    case Errc::NoProperSublattice: return "NoProperSublattice";
    case Errc::DependentForms: return "DependentForms";
    case Errc::ZeroTheta: return "ZeroTheta";
    case Errc::DegreeExceedsEll: return "DegreeExceedsEll";
    case Errc::SearchExhausted: return "SearchExhausted";
    case Errc::BoundaryIndeterminate: return "BoundaryIndeterminate";
    case Errc::PrecisionCap: return "PrecisionCap";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::BoundViolation: return "BoundViolation";
    case Errc::NonIntegerDPrime: return "NonIntegerDPrime";
    case Errc::PreconditionViolation: return "PreconditionViolation";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

int exit_code(Errc code) {
  switch (code) {
    case Errc::DependentForms:
    case Errc::ZeroTheta:
      return 3;
    case Errc::RankCapExceeded:
    case Errc::NotFoundWithinRadius:
    case Errc::GridExhaustedAtPrecisionCap:
    case Errc::SearchExhausted:
    case Errc::BoundaryIndeterminate:
    case Errc::PrecisionCap:
    case Errc::CapExceeded:
      return 4;
    case Errc::BoundViolation:
    case Errc::NonIntegerDPrime:
    case Errc::ClosedFormMismatch:
    case Errc::Internal:
      return 5;
    default:
      return 2;
  }
}

}  // namespace kronav
