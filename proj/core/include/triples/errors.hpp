#pragma once

#include <stdexcept>
#include <string>

namespace triples {

enum class errc {
  non_positive_determinant,
  invalid_region,
  invalid_a,
  invalid_gamma_params,
  degenerate_phase,
  invalid_determinant,
  boundary_eigenvalue,
  inconsistent_phases,
  regime_violation,
  degenerate_charge,
  rank_constraint,
  heart_violation,
  undefined_slope,
  phase_undefined,
  shape_violation,
  degenerate_on_path,
  size_bound,
  malformed_input,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::non_positive_determinant: return "NonPositiveDeterminant";
    case errc::invalid_region: return "InvalidRegion";
    case errc::invalid_a: return "InvalidA";
    case errc::invalid_gamma_params: return "InvalidGammaParams";
    case errc::degenerate_phase: return "DegeneratePhase";
    case errc::invalid_determinant: return "InvalidDeterminant";
    case errc::boundary_eigenvalue: return "BoundaryEigenvalue";
    case errc::inconsistent_phases: return "InconsistentPhases";
    case errc::regime_violation: return "RegimeViolation";
    case errc::degenerate_charge: return "DegenerateCharge";
    case errc::rank_constraint: return "RankConstraint";
    case errc::heart_violation: return "HeartViolation";
    case errc::undefined_slope: return "UndefinedSlope";
    case errc::phase_undefined: return "PhaseUndefined";
    case errc::shape_violation: return "ShapeViolation";
    case errc::degenerate_on_path: return "DegenerateOnPath";
    case errc::size_bound: return "SizeBound";
    case errc::malformed_input: return "MalformedInput";
  }
  return "UnknownError";
}

class domain_error : public std::runtime_error {
 public:
  domain_error(errc c, const std::string& detail)
      : std::runtime_error(std::string(errc_name(c)) + ": " + detail), code_(c) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace triples
