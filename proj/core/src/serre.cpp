#include "triples/serre.hpp"

#include <cmath>

namespace triples {

namespace {

// Unique integer in the half-open interval [x, x+1).
long long int_in_window(double x) {
  long long m = static_cast<long long>(std::ceil(x));
  if (static_cast<double>(m) < x) ++m;
  if (static_cast<double>(m) >= x + 1.0) --m;
  return m;
}

LiftedElement element_with_f0_window(const CurveCharge& Z, double lo) {
  LiftedElement g = element_from_charge(Z, 0);
  const double v = lift_at_zero(g);  // branch-0 value
  g.branch = int_in_window((lo - v) / 2.0);
  return g;
}

double mu_phase(const CurveClass& x) {
  if (x == CurveClass{0, 1}) return 1.0;
  return std::atan2(static_cast<double>(x.r), -static_cast<double>(x.d)) /
         M_PI;
}

}  // namespace

const ClassAuto& serre_matrix() {
  static const ClassAuto s = {{{0, 0, -1, 0},
                               {0, 0, 0, -1},
                               {1, 0, -1, 0},
                               {0, 1, 0, -1}}};
  return s;
}

TripleClass apply_auto(const ClassAuto& m, const TripleClass& e) {
  const long long v[4] = {e.r1, e.d1, e.r2, e.d2};
  long long w[4] = {0, 0, 0, 0};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) w[i] += m[i][j] * v[j];
  return {w[0], w[1], w[2], w[3]};
}

TripleClass serre_class(const TripleClass& e) {
  return apply_auto(serre_matrix(), e);
}

TripleClass serre_class_inverse(const TripleClass& e) {
  // (a, b) -> (b - a, -a)
  return {e.r2 - e.r1, e.d2 - e.d1, -e.r1, -e.d1};
}

TripleClass dual_class(const TripleClass& e) {
  return {e.r2, -e.d2, e.r1, -e.d1};
}

DualCurveCharge dual_curve_charge(const CurveCharge& Z, double theta) {
  // [[-A,B],[-D,C]] -> [[-A,-B],[D,C]]
  CurveCharge dual{Matrix2{Z.M.a, -Z.M.b, -Z.M.c, Z.M.d}};
  return {dual, 1.0 - theta, -1};
}

GluedDescriptor dual_triple_descriptor(const GluedDescriptor& d) {
  if (d.sod != Sod::s12)
    throw domain_error(errc::shape_violation, "dual needs the 12-shape");
  const Matrix2 Mg = d.Z1.M * d.Z2.M.inverse();  // transition T_g^{-1}
  if (Mg.c != 0)
    throw domain_error(errc::shape_violation,
                       "transition matrix must be upper triangular");
  if (!(Mg.d > 0))
    throw domain_error(errc::shape_violation,
                       "transition matrix needs C > 0");
  const Rat B = Mg.b, C = Mg.d;

  const LiftedElement e1 = first_element(d);
  const LiftedElement e2 = second_element(d);
  const LiftedElement g = compose(invert(e2), e1);  // sigma1 = sigma2 . g

  // First dual constituent: Z2 with B, D flipped, lift value negated.
  const CurveCharge Z2dual{Matrix2{d.Z2.M.a, -d.Z2.M.b, -d.Z2.M.c, d.Z2.M.d}};
  LiftedElement e2dual = element_from_charge(Z2dual, 0);
  {
    const double target = -lift_at_zero(e2);
    const double v = lift_at_zero(e2dual);
    e2dual.branch = static_cast<long long>(std::llround((target - v) / 2.0));
  }

  // Second constituent: sigma2^dual acted by g N_{2B/C}.
  const Rat x = 2 * B / C;
  const Matrix2 Nx{1, x, 0, 1};
  const LiftedElement n_elem{Nx, 0};
  const LiftedElement moved = compose(e2dual, compose(g, n_elem));

  GluedDescriptor out;
  out.sod = Sod::s12;
  out.Z1 = Z2dual;
  out.branch1 = e2dual.branch;
  out.Z2 = charge_of_element(moved);
  out.branch2 = moved.branch;
  return out;
}

HnTriangleReport hn_triangle_i(const CurveClass& x, const StabDescriptor& d) {
  if (!(x == CurveClass{0, 1} || x.r == 1))
    throw domain_error(errc::malformed_input,
                       "x must be a skyscraper (0,1) or line bundle (1,d)");
  const double t = mu_phase(x);
  const GluedDescriptor& gd = d.data;

  double phi_l = 0, phi_j = 0, phi_i = 0;
  switch (gd.sod) {
    case Sod::s12: {
      const LiftedElement e1 = first_element(gd);
      const LiftedElement e2 = second_element(gd);
      phi_i = inverse_lift(e1, t);
      phi_j = inverse_lift(e2, t);
      // Charge on l-classes is (M1 + M2); its heart branch sits within one
      // even period above the first constituent.
      const CurveCharge Z3{gd.Z1.M + gd.Z2.M};
      if (Z3.M.det() <= 0)
        throw domain_error(errc::phase_undefined,
                           "degenerate l-factor charge");
      const LiftedElement e3 = element_with_f0_window(Z3, lift_at_zero(e1));
      phi_l = inverse_lift(e3, t);
      break;
    }
    case Sod::s23: {
      const LiftedElement ej = first_element(gd);
      const LiftedElement el = second_element(gd);
      phi_j = inverse_lift(ej, t);
      phi_l = inverse_lift(el, t);
      const CurveCharge Zi{(-gd.Z1.M) + gd.Z2.M};
      if (Zi.M.det() <= 0)
        throw domain_error(errc::phase_undefined,
                           "degenerate i-factor charge");
      const LiftedElement ei =
          element_with_f0_window(Zi, lift_at_zero(el) - 1.0);
      phi_i = inverse_lift(ei, t);
      break;
    }
    case Sod::s31: {
      const LiftedElement el = first_element(gd);
      const LiftedElement ei = second_element(gd);
      phi_l = inverse_lift(el, t);
      phi_i = inverse_lift(ei, t);
      const CurveCharge Zj{gd.Z1.M + (-gd.Z2.M)};
      if (Zj.M.det() <= 0)
        throw domain_error(errc::phase_undefined,
                           "degenerate j-factor charge");
      const LiftedElement ej =
          element_with_f0_window(Zj, lift_at_zero(el) - 1.0);
      phi_j = inverse_lift(ej, t);
      break;
    }
  }

  const TripleClass l_cls = embed(Embedding::l, x);
  const TripleClass j1_cls = -embed(Embedding::j, x);
  if (charge(d, l_cls).is_zero() || charge(d, j1_cls).is_zero())
    throw domain_error(errc::phase_undefined, "factor class has zero charge");

  constexpr double tol = 1e-9;
  HnTriangleReport rep;
  if (phi_l > phi_j + 1.0 + tol) {
    rep.kind = HnTriangleReport::Kind::filtration;
    rep.factors = {{l_cls, phi_l}, {j1_cls, phi_j + 1.0}};
  } else if (phi_l >= phi_j + 1.0 - tol) {
    rep.kind = HnTriangleReport::Kind::jordan_holder;
    rep.factors = {{l_cls, phi_l}, {j1_cls, phi_j + 1.0}};
  } else {
    rep.kind = HnTriangleReport::Kind::semistable;
    rep.factors = {{embed(Embedding::i, x), phi_i}};
  }
  return rep;
}

}  // namespace triples
