#pragma once

#include "triples/classify.hpp"
#include "triples/descriptor.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

// Phase-constraint auditing for the six distinguished classes, the region
// predicates with the delta function, and a wall-detecting path tracer.

namespace triples {

enum class StabFlag { unknown, stable, semistable, unstable };

// Indices follow the distinguished numbering: 0 i-skyscraper, 1 i-structure,
// 2 j-skyscraper, 3 j-structure, 4 l-skyscraper, 5 l-structure.
struct PhaseProfile {
  std::array<std::optional<double>, 6> phi;
  std::array<StabFlag, 6> flag{StabFlag::unknown, StabFlag::unknown,
                               StabFlag::unknown, StabFlag::unknown,
                               StabFlag::unknown, StabFlag::unknown};
};

struct Violation {
  std::string rule;
  std::string detail;
};

// Evaluates the morphism and instability constraints; violations are data,
// never errors.  Adding a stable flag can only add violations.
std::vector<Violation> audit(const PhaseProfile& p);

// Membership in the product region: phi0 < phi2+1, phi1 < phi3+1, and when
// phi0 > phi2 additionally det(M1+M2) > 0 (exact).
bool in_P12(const RhoPoint& rho_i, const RhoPoint& rho_j, const Matrix2& M1,
            const Matrix2& M2);

// The section region: f(0) > -1, f^{-1}(1/2) < 3/2, and det(M+I) > 0 when
// f(0) < 0.
bool in_L12(const LiftedElement& g);

// delta(m0,m1,phi0,phi1)
//   = m0 m1 sin((phi0-phi1) pi) - m0 cos(phi0 pi) + m1 sin(phi1 pi);
// equals det(M+I) - 1 for the matrix with the given mass/phase columns.
double delta(const RhoPoint& p);

// Image of the section region under rho.
bool in_Y(const RhoPoint& p);

struct WallEvent {
  double t;
  std::string wall;
  std::string left, right;  // region names, or an error name at a boundary
};

// Walks the straight segment between two normalized descriptors (12-shape,
// second constituent sigma_mu), watching the six distinguished phases and
// the classification invariants; sign changes are bisected to 1e-9.
// Sample points are exact rationals, so algebraic walls get exact signs.
// Throws DegenerateOnPath when det(M1(t)) <= 0, ShapeViolation when the
// endpoints are not normalized 12-shape data.
std::vector<WallEvent> trace_path(const StabDescriptor& a,
                                  const StabDescriptor& b, int samples);

}  // namespace triples
