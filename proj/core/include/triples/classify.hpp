#pragma once

#include "triples/cover.hpp"
#include "triples/descriptor.hpp"

#include <string>
#include <vector>

// The eigenvalue trichotomy for normalized stability data, fixed-point
// detection for the constituent lifts, and Serre transport of descriptors.

namespace triples {

// Data of a stability datum normalized so the second constituent is
// sigma_mu: the transported first-constituent charge matrix and f1(0).
struct ConditionStarData {
  Matrix2 M;
  double f0;  // f1(0), in (-1, oo)
};

enum class RegionTag { theta1, theta2, theta3, gamma };
const char* region_name(RegionTag t);

struct SignFact {
  std::string name;
  Rat value;
};

struct Verdict {
  RegionTag tag;
  std::vector<SignFact> certificates;  // delta, trace, det, detMplusI
};

// Exact sign-test classification.  f0 >= 0 is immediately theta1; otherwise
// the decision uses only the signs of delta = tr^2 - 4 det, tr, det, tr + 2
// and det(M+I) in rational arithmetic.  Throws InvalidDeterminant on
// det <= 0 and BoundaryEigenvalue on det(M+I) <= 0 (eigenvalue at -1 or the
// data violates the normalized-region invariant).
Verdict trichotomy(const ConditionStarData& data);

// Build condition-(*) data from the rho coordinates of the two constituent
// data (i-objects and j-objects): act on the right by the inverse of the
// j-element, transporting the i-element.  Throws InconsistentPhases when
// phi0 >= phi2 + 1 or phi1 >= phi3 + 1.
ConditionStarData normalize(const RhoPoint& i_data, const RhoPoint& j_data);

struct FixedPointResult {
  enum class Kind { none, all, at };
  Kind kind;
  double t;  // meaningful for Kind::at
};

// Fixed points of the lift: f(t) = t.  Requires a positive real eigenvalue
// of T whose eigendirection sits on the branch; scalar T with branch 0
// fixes everything.
FixedPointResult fixed_point(const LiftedElement& g);

// Pushes the descriptor's charge forward along the class-level Serre
// automorphism; the heart tag advances 12 -> 23 -> 31 -> 12 and branches
// pick up the shifts of the transported factors.
StabDescriptor serre_transport(const StabDescriptor& d);

}  // namespace triples
