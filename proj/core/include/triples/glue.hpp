#pragma once

#include "triples/classes.hpp"
#include "triples/cover.hpp"
#include "triples/errors.hpp"
#include "triples/rational.hpp"

#include <utility>

// CP-gluing of curve stability data along the three semiorthogonal
// decompositions, at the level of central charges on Z^4.

namespace triples {

enum class Sod { s12 = 12, s23 = 23, s31 = 31 };

inline int sod_id(Sod s) { return static_cast<int>(s); }
Sod sod_from_id(int id);  // throws MalformedInput

// Glued stability datum: constituent charges and heart branches for the two
// factors of the decomposition, in order (first factor, second factor).
struct GluedDescriptor {
  Sod sod = Sod::s12;
  CurveCharge Z1, Z2;
  long long branch1 = 0, branch2 = 0;
};

LiftedElement first_element(const GluedDescriptor& d);
LiftedElement second_element(const GluedDescriptor& d);

// Gluing inequality per decomposition, on heart parameters.  rA belongs to
// the first factor.  12: rA >= rB; 31 and 23: rA >= rB + 1.
bool check_gluing(Sod sod, double rA, double rB);
bool gluing_ok(const GluedDescriptor& d);

// Z = Z1 o lambda_1 + Z2 o rho_2, with the projections of the chosen SOD.
// Defined for any class, whether or not the gluing inequality holds.
QC glued_charge(const GluedDescriptor& d, const TripleClass& e);

// The classical alpha-stability charge -d1 - d2 - alpha r1 + i(r1 + r2),
// realized as a glued-12 descriptor with Z2 = Z_mu.
GluedDescriptor alpha_charge(const Rat& alpha);

// S(a) membership: f1(0) >= f2(0) and f1(a) >= f2(a).  Throws InvalidA.
bool in_S_a(const LiftedElement& g1, const LiftedElement& g2, double a);

// Exact heart-slope datum alpha = -cot(pi theta): a rational value, the
// infinite value (theta = 0), or an irrationality marker.
struct HeartSlope {
  enum class Kind { finite, infinite, irrational };
  Kind kind = Kind::finite;
  Rat cot_value;  // meaningful for kind == finite

  static HeartSlope finite(Rat v) { return {Kind::finite, std::move(v)}; }
  static HeartSlope infinite() { return {Kind::infinite, {}}; }
  static HeartSlope irrational() { return {Kind::irrational, {}}; }

  // tan(pi theta) is rational iff the cotangent is rational or infinite.
  bool tan_rational() const { return kind != Kind::irrational; }
};

bool hn_rational(const HeartSlope& s1, const HeartSlope& s2);

enum class RecollementVerdict { admits, no_stability_function };

// Recollement hearts strictly between the gluing extremes carry no
// stability function: no_stability_function iff r2 - 1 < r1 < r2.
RecollementVerdict jealousy(const Rat& r1, const Rat& r2);

// Heart tags (n, theta) of the two constituents.
std::pair<HeartDescriptor, HeartDescriptor> heart_tags(const GluedDescriptor& d);

}  // namespace triples
