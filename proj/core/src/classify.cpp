#include "triples/classify.hpp"

#include <cmath>

namespace triples {

const char* region_name(RegionTag t) {
  switch (t) {
    case RegionTag::theta1: return "Theta1";
    case RegionTag::theta2: return "Theta2";
    case RegionTag::theta3: return "Theta3";
    case RegionTag::gamma: return "Gamma";
  }
  return "?";
}

Verdict trichotomy(const ConditionStarData& data) {
  const Rat det = data.M.det();
  const Rat tr = data.M.trace();
  const Rat delta = tr * tr - 4 * det;
  const Rat det_mi = det + tr + 1;  // det(M + I)

  if (!(det > 0))
    throw domain_error(errc::invalid_determinant, "det(M) <= 0");

  Verdict v;
  v.certificates = {{"delta", delta},
                    {"trace", tr},
                    {"det", det},
                    {"detMplusI", det_mi}};

  if (data.f0 >= 0) {
    v.tag = RegionTag::theta1;
    return v;
  }
  if (det_mi == 0)
    throw domain_error(errc::boundary_eigenvalue, "det(M+I) = 0");
  if (det_mi < 0)
    throw domain_error(errc::boundary_eigenvalue,
                       "det(M+I) < 0 outside the normalized region");

  if (delta < 0)
    v.tag = RegionTag::gamma;
  else if (tr > 0)
    v.tag = RegionTag::theta1;
  else if (tr + 2 < 0)
    v.tag = RegionTag::theta3;
  else
    v.tag = RegionTag::theta2;
  return v;
}

ConditionStarData normalize(const RhoPoint& i_data, const RhoPoint& j_data) {
  if (!(i_data.phi0 < j_data.phi0 + 1))
    throw domain_error(errc::inconsistent_phases, "phi0 < phi2 + 1 violated");
  if (!(i_data.phi1 < j_data.phi1 + 1))
    throw domain_error(errc::inconsistent_phases, "phi1 < phi3 + 1 violated");
  const LiftedElement g1 = rho_inverse(i_data);
  const LiftedElement g2 = rho_inverse(j_data);
  const LiftedElement h = compose(g1, invert(g2));
  return {h.T.inverse(), lift_at_zero(h)};
}

FixedPointResult fixed_point(const LiftedElement& g) {
  constexpr double tol = 1e-9;
  const Matrix2& T = g.T;
  if (T.det() <= 0)
    throw domain_error(errc::non_positive_determinant, "det(T) > 0 required");

  const bool scalar = (T.b == 0 && T.c == 0 && T.a == T.d);
  if (scalar) {
    if (g.branch == 0 && T.a > 0) return {FixedPointResult::Kind::all, 0.0};
    return {FixedPointResult::Kind::none, 0.0};
  }

  const Rat tr = T.trace();
  const Rat delta = tr * tr - 4 * T.det();
  // det > 0 means real eigenvalues share a sign, the sign of the trace.
  if (delta < 0 || !(tr > 0)) return {FixedPointResult::Kind::none, 0.0};

  const double trd = to_double(tr);
  const double sq = std::sqrt(std::max(0.0, to_double(delta)));
  const double ad = to_double(T.a), bd = to_double(T.b);
  const double cd = to_double(T.c), dd = to_double(T.d);

  double best = 2.0;
  bool found = false;
  for (double lam : {(trd + sq) / 2.0, (trd - sq) / 2.0}) {
    double vx, vy;
    if (std::abs(bd) > 1e-15 || std::abs(lam - ad) > 1e-15) {
      vx = bd;
      vy = lam - ad;
    } else {
      vx = lam - dd;
      vy = cd;
    }
    if (std::hypot(vx, vy) < 1e-15) continue;
    double t = std::atan2(vy, vx) / M_PI;
    t -= std::floor(t);  // representative ray angle in [0,1)
    if (std::abs(eval_lift(g, t) - t) < tol) {
      found = true;
      best = std::min(best, t);
    }
  }
  if (found) return {FixedPointResult::Kind::at, best};
  return {FixedPointResult::Kind::none, 0.0};
}

namespace {

void move_factor(CurveCharge& Z, long long& branch, int n) {
  LiftedElement e = element_from_charge(Z, branch);
  e = shift(e, n);  // odd n negates the charge matrix
  Z = charge_of_element(e);
  branch = e.branch;
}

}  // namespace

StabDescriptor serre_transport(const StabDescriptor& d) {
  // Each factor lands in the next subcategory with the shift dictated by
  // the Serre images of the embeddings at genus 1:
  //   12 -> 23: first factor [2], second factor [1]
  //   23 -> 31: first [1], second [1]
  //   31 -> 12: first [1], second [2]
  // Odd shifts negate the factor's charge matrix on classes.
  StabDescriptor out = d;
  GluedDescriptor& gd = out.data;
  switch (d.data.sod) {
    case Sod::s12:
      gd.sod = Sod::s23;
      move_factor(gd.Z1, gd.branch1, 2);
      move_factor(gd.Z2, gd.branch2, 1);
      break;
    case Sod::s23:
      gd.sod = Sod::s31;
      move_factor(gd.Z1, gd.branch1, 1);
      move_factor(gd.Z2, gd.branch2, 1);
      break;
    case Sod::s31:
      gd.sod = Sod::s12;
      move_factor(gd.Z1, gd.branch1, 1);
      move_factor(gd.Z2, gd.branch2, 2);
      break;
  }
  return out;
}

}  // namespace triples
