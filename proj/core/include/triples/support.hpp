#pragma once

#include "triples/descriptor.hpp"
#include "triples/tilt.hpp"

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

// Support-property quadratic forms for the four regimes, exact kernel
// negative-definiteness certification, and the semistable-existence bounds.

namespace triples {

struct QuadForm4 {
  std::array<std::array<Rat, 4>, 4> m{};  // symmetric, coordinates (r1,d1,r2,d2)

  Rat eval(const TripleClass& e) const;
  Rat eval_vec(const std::array<Rat, 4>& v) const;
  Rat pair(const std::array<Rat, 4>& u, const std::array<Rat, 4>& v) const;
  bool symmetric() const;
};

// Two orthogonal constituents (gluing margin at least a full shift).
struct StrongOrth {
  CurveCharge Z1, Z2;
};

// Same-heart gluing with upper-triangular transition [[-A,B],[0,C]];
// second constituent sigma_mu.  Needs C > 0, A < 0 and B != 0 for
// delta = -CA/B^2.
struct SameHeartUpper {
  Rat A, B, C;
};

// Glued with negative discriminant: M = [[-A,B],[-D,C]] with
// (A+C)^2 - 4BD < 0, D > 0, B > 0; second constituent sigma_mu.
struct GluedNegDisc {
  Rat A, B, C, D;
};

// The Euler form regime for the tilted non-gluing data; genus 1 only.
struct GammaEuler {
  GammaParams p;
  int genus = 1;
};

using SupportRegime =
    std::variant<StrongOrth, SameHeartUpper, GluedNegDisc, GammaEuler>;

// Exact symmetric matrix of the regime's quadratic form.
// Throws RegimeViolation naming the failed precondition.
QuadForm4 build_Q(const SupportRegime& regime);

struct KernelCertificate {
  bool certified;
  std::array<std::array<Rat, 4>, 2> kernel_basis;
  Rat minor1, minor2;  // leading principal minors of -G on the kernel
  std::optional<std::array<Rat, 4>> counterexample;  // Q >= 0 on failure
};

// Restricts Q to the two-dimensional kernel of the charge (exact rational
// solve) and certifies negative definiteness by leading principal minors.
// Throws DegenerateCharge when the two real functionals are dependent.
KernelCertificate kernel_negdef(const QuadForm4& Q, const StabDescriptor& Z);

struct FamilyValue {
  std::string family;      // "i", "j", "l"
  Rat c_rr, c_rd, c_dd;    // Q(r,d-family) = c_rr r^2 + c_rd r d + c_dd d^2
};

// Symbolic values of Q on the embedded families (r,d,0,0), (0,0,r,d),
// (r,d,r,d).
std::vector<FamilyValue> q_on_distinguished(const QuadForm4& Q);

struct SlopeInterval {
  Rat lo, hi;
  bool contains_minus_B;
};

// Existence window for -B given a semistable class: direct formula for
// r2 > r1 > 0, the r1 > r2 > 0 case transported through the derived dual.
// Throws RankConstraint on r1 == r2 or nonpositive ranks.
SlopeInterval cotassp_interval(const Rat& A, const Rat& B, const Rat& C,
                               const TripleClass& e);

// l(L) stability for a line bundle of degree d under the charge matrix M:
// the quadratic inequality -D d^2 - (A+C) d - B > 0, exact.
// Throws HeartViolation when C + D d < 0 (i(L) outside the heart).
bool lstar_line_bundle_stable(const Matrix2& M, long long d);

struct InequalityCheck {
  std::string tag;  // "IBGG", "IIBGG", "IE1GG"
  bool holds;
};

// The chain of necessary inequalities for a semistable class with
// nonvanishing transition.  Throws UndefinedSlope when C r1 + r2 = 0 on a
// nonzero class.
std::vector<InequalityCheck> necessary_chain(const Rat& A, const Rat& B,
                                             const Rat& C,
                                             const TripleClass& e);

}  // namespace triples
