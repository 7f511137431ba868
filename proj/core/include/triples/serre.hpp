#pragma once

#include "triples/classes.hpp"
#include "triples/descriptor.hpp"

#include <array>
#include <optional>
#include <vector>

// Class-level Serre functor at genus 1, the derived dual, dual stability
// data, and the filtration triangle of embedded classes.

namespace triples {

using ClassAuto = std::array<std::array<long long, 4>, 4>;

// The Serre automorphism of Z^4: writing e = (a, b) with curve-class blocks
// a = (r1,d1), b = (r2,d2), it is (a, b) -> (-b, a - b).  Pinned by the
// images of the embedded generators (i-classes to j-classes, j to -l,
// l to -i, with [E[1]] = -[E]); genus 1 only.
const ClassAuto& serre_matrix();

TripleClass apply_auto(const ClassAuto& m, const TripleClass& e);
TripleClass serre_class(const TripleClass& e);
TripleClass serre_class_inverse(const TripleClass& e);

// Derived dual: (r1,d1,r2,d2) -> (r2,-d2,r1,-d1); an involution.
TripleClass dual_class(const TripleClass& e);

// Dual curve stability datum: B and D flip sign, theta -> 1 - theta with a
// [-1] shift recorded.
struct DualCurveCharge {
  CurveCharge Z;
  double theta;
  int shift;  // always -1
};
DualCurveCharge dual_curve_charge(const CurveCharge& Z, double theta);

// Dual of a glued-12 descriptor whose constituent transition g = (T, f),
// M_g = Z1 Z2^{-1}, is upper triangular [[-A,B],[0,C]].  Returns
// gl12(Z2^dual, Z2^dual transported by g N_{2B/C}).  Throws ShapeViolation.
GluedDescriptor dual_triple_descriptor(const GluedDescriptor& d);

// Filtration of the embedded class i(x) through the triangle with outer
// classes l(x) and j(x)[1].
struct HnTriangleReport {
  enum class Kind { semistable, jordan_holder, filtration };
  struct Factor {
    TripleClass cls;
    double phase;
  };
  Kind kind;
  std::vector<Factor> factors;  // decreasing phases for Kind::filtration
};

// x must be a skyscraper (0,1) or line-bundle (1,d) class.
// Throws PhaseUndefined when a factor class has charge zero.
HnTriangleReport hn_triangle_i(const CurveClass& x, const StabDescriptor& d);

}  // namespace triples
