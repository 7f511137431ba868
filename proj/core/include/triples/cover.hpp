#pragma once

#include "triples/classes.hpp"
#include "triples/errors.hpp"
#include "triples/rational.hpp"

// The universal cover of GL+(2,R).  An element is a pair (T, f) where f is
// the continuous increasing lift, with f(x+1) = f(x)+1, of the action of T
// on rays; it is stored as (T, branch m) pinned by f(0) = 2m + phi/pi with
// phi the Iwasawa rotation angle of T.  Matrix data stays rational; lift
// evaluation is double precision with continuous angle tracking.

namespace triples {

struct Matrix2 {
  Rat a, b, c, d;  // [[a,b],[c,d]]

  Rat det() const { return a * d - b * c; }
  Rat trace() const { return a + d; }

  Matrix2 operator*(const Matrix2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Matrix2 operator+(const Matrix2& o) const {
    return {a + o.a, b + o.b, c + o.c, d + o.d};
  }
  Matrix2 operator-() const { return {-a, -b, -c, -d}; }
  bool operator==(const Matrix2& o) const = default;

  Matrix2 inverse() const;  // throws NonPositiveDeterminant on det == 0

  static Matrix2 identity() { return {1, 0, 0, 1}; }
  static Matrix2 from_doubles(double a_, double b_, double c_, double d_) {
    return {rat_from_double(a_), rat_from_double(b_), rat_from_double(c_),
            rat_from_double(d_)};
  }
};

struct IwasawaDecomposition {
  double k;    // > 0
  double phi;  // rotation angle in [0, 2*pi)
  double a;    // > 0
  double x;
};

// T = k * K_phi * A_a * N_x, unique.  Throws NonPositiveDeterminant.
IwasawaDecomposition iwasawa(const Matrix2& T);

struct LiftedElement {
  Matrix2 T;
  long long branch = 0;  // m in f(0) = 2m + phi/pi

  static LiftedElement identity() { return {Matrix2::identity(), 0}; }
};

// f(0) of the element.
double lift_at_zero(const LiftedElement& g);

// f(t): continuous angle tracking of the ray direction under T, never a
// principal-value jump.
double eval_lift(const LiftedElement& g, double t);

// f^{-1}(y).
double inverse_lift(const LiftedElement& g, double y);

// Group law on the cover: f_{compose(g,h)} = f_g o f_h.
LiftedElement compose(const LiftedElement& g, const LiftedElement& h);
LiftedElement invert(const LiftedElement& g);

// The shift [n]: T -> (-1)^n T and f(0) -> f(0) + n.
LiftedElement shift(const LiftedElement& g, long long n);

// A central charge on the curve lattice, M = [[-A,B],[-D,C]], acting as
// Z(r,d) = Ad + Br + i(Cr + Dd), i.e. (Re,Im) = M . (-d, r)^T.
struct CurveCharge {
  Matrix2 M;

  Rat A() const { return -M.a; }
  Rat B() const { return M.b; }
  Rat D() const { return -M.c; }
  Rat C() const { return M.d; }

  bool operator==(const CurveCharge&) const = default;

  static CurveCharge mu() { return {Matrix2::identity()}; }
};

QC charge_eval(const CurveCharge& Z, const CurveClass& x);

// The element whose stability data has charge matrix M, i.e. T = M^{-1}.
LiftedElement element_from_charge(const CurveCharge& Z, long long branch);
CurveCharge charge_of_element(const LiftedElement& g);

// Coordinates of a curve stability datum: masses and phases of the
// skyscraper and structure-sheaf classes.
struct RhoPoint {
  double m0, m1;    // masses, > 0
  double phi0, phi1;  // phases, phi1 < phi0 < phi1 + 1

  bool valid() const {
    return m0 > 0 && m1 > 0 && phi1 < phi0 && phi0 < phi1 + 1;
  }
};

RhoPoint rho(const LiftedElement& g);
LiftedElement rho_inverse(const RhoPoint& p);  // throws InvalidRegion

struct HeartDescriptor {
  long long n;   // shift
  double theta;  // in [0,1), with n + theta = f(0)
};

HeartDescriptor heart_descriptor(const LiftedElement& g);

}  // namespace triples
