#pragma once

#include "triples/classes.hpp"
#include "triples/cover.hpp"
#include "triples/errors.hpp"
#include "triples/rational.hpp"

#include <array>
#include <string>

// Stability data on the tilted hearts: weak charge, the tilted charge Z_r
// with its validity constraints, the heart indices, and the phases of the
// six distinguished classes.

namespace triples {

// Parameters of the tilted charge
//   Z_r(r1,d1,r2,d2) = A1 d1 + B1 r1 - d2 + i(D1 d1 + C1 r1 + r2),
// valid when D1 < 0, det(M) > 0 and det(M+I) > 0 for M = [[-A1,B1],[-D1,C1]].
struct GammaParams {
  Rat A1, B1, C1, D1;

  Matrix2 M() const { return {-A1, B1, -D1, C1}; }
  Rat det_M() const { return -A1 * C1 + B1 * D1; }
  Rat det_M_plus_I() const { return det_M() + (-A1 + C1) + 1; }

  void validate() const;  // throws InvalidGammaParams naming the constraint
};

// The truncation threshold for the torsion pair behind the tilt.  Fixed;
// the weak-charge inequality below is its instantiation.
inline constexpr double kTiltPhaseThreshold = 0.75;

// Weak charge D1 d1 + (C1-1) r1 + i(r1 + r2); kernel is the j-torsion
// directions (0,0,0,d2).
QC weak_charge(const GammaParams& p, const TripleClass& e);

// Tilted charge; validates the parameters.
QC zr_charge(const GammaParams& p, const TripleClass& e);

// Heart index r = arg(C1 + D1 i)/pi on the (-pi, 0] branch.
double heart_index_r(const GammaParams& p);

// Index of the third constituent heart, acot((C1+1)/D1)/pi on the branch
// with value in (-1, 0).  The positive acot branch would put the l-factor a
// full shift up, inconsistent with the [1]-shift convention of the glued
// standard hearts, so it is rejected.
double r3(const GammaParams& p);

// Whether the weak phase exceeds the 3/4 threshold:
// -D1 d1 - C1 r1 - r2 > 0, exactly.  Throws DegeneratePhase when the class
// is nonzero on the weak charge but r1 + r2 <= 0.
bool lambda_gt_threshold(const GammaParams& p, const TripleClass& e);

struct DistinguishedPhase {
  std::string object;  // "i C(x)", "i O", "j C(x)", "j O", "l C(x)", "l O"
  int heart_shift;     // n with object[n] in the tilted heart
  double phase;
};

struct DistinguishedTable {
  std::array<DistinguishedPhase, 6> rows;  // order phi0..phi5
  // Skyscraper images are always stable here; the structure-sheaf flags
  // depend on phi1 and phi5.
  bool i_structure_stable, j_structure_stable, l_structure_stable;
};

DistinguishedTable distinguished_phases(const GammaParams& p);

}  // namespace triples
