#include "triples/glue.hpp"

namespace triples {

Sod sod_from_id(int id) {
  switch (id) {
    case 12: return Sod::s12;
    case 23: return Sod::s23;
    case 31: return Sod::s31;
  }
  throw domain_error(errc::malformed_input, "sod must be 12, 23 or 31");
}

LiftedElement first_element(const GluedDescriptor& d) {
  return element_from_charge(d.Z1, d.branch1);
}

LiftedElement second_element(const GluedDescriptor& d) {
  return element_from_charge(d.Z2, d.branch2);
}

bool check_gluing(Sod sod, double rA, double rB) {
  switch (sod) {
    case Sod::s12: return rA >= rB;
    case Sod::s31: return rA >= rB + 1;
    case Sod::s23: return rA >= rB + 1;
  }
  return false;
}

bool gluing_ok(const GluedDescriptor& d) {
  const double rA = lift_at_zero(first_element(d));
  const double rB = lift_at_zero(second_element(d));
  return check_gluing(d.sod, rA, rB);
}

QC glued_charge(const GluedDescriptor& d, const TripleClass& e) {
  CurveClass to_first, to_second;
  switch (d.sod) {
    case Sod::s12:  // lambda_1 = i^*, rho_2 = j^!
      to_first = project(Projection::istar, e);
      to_second = project(Projection::jshriek, e);
      break;
    case Sod::s23:  // lambda_1 = j^*, rho_2 = l^!
      to_first = project(Projection::jstar, e);
      to_second = project(Projection::istar, e);  // l^! picks E1
      break;
    case Sod::s31:  // lambda_1 = l^*, rho_2 = i^!
      to_first = project(Projection::jshriek, e);  // l^* picks E2
      to_second = project(Projection::ishriek, e);
      break;
  }
  return charge_eval(d.Z1, to_first) + charge_eval(d.Z2, to_second);
}

GluedDescriptor alpha_charge(const Rat& alpha) {
  GluedDescriptor d;
  d.sod = Sod::s12;
  // M1 = [[1,-alpha],[0,1]] so that Re Z1(r,d) = -d - alpha r; the sign of
  // the off-diagonal entry is the one reproducing the closed form.
  d.Z1 = CurveCharge{Matrix2{1, -alpha, 0, 1}};
  d.Z2 = CurveCharge::mu();
  return d;
}

bool in_S_a(const LiftedElement& g1, const LiftedElement& g2, double a) {
  if (!(a > 0.0 && a < 1.0))
    throw domain_error(errc::invalid_a, "a must lie in (0,1)");
  return eval_lift(g1, 0.0) >= eval_lift(g2, 0.0) &&
         eval_lift(g1, a) >= eval_lift(g2, a);
}

bool hn_rational(const HeartSlope& s1, const HeartSlope& s2) {
  return s1.tan_rational() && s2.tan_rational();
}

RecollementVerdict jealousy(const Rat& r1, const Rat& r2) {
  if (r2 - 1 < r1 && r1 < r2) return RecollementVerdict::no_stability_function;
  return RecollementVerdict::admits;
}

std::pair<HeartDescriptor, HeartDescriptor> heart_tags(const GluedDescriptor& d) {
  return {heart_descriptor(first_element(d)),
          heart_descriptor(second_element(d))};
}

}  // namespace triples
