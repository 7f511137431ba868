#include "triples/tilt.hpp"

#include <cmath>

namespace triples {

void GammaParams::validate() const {
  if (!(D1 < 0))
    throw domain_error(errc::invalid_gamma_params, "D1 < 0 required");
  if (!(det_M() > 0))
    throw domain_error(errc::invalid_gamma_params, "det(M) > 0 required");
  if (!(det_M_plus_I() > 0))
    throw domain_error(errc::invalid_gamma_params, "det(M+I) > 0 required");
}

QC weak_charge(const GammaParams& p, const TripleClass& e) {
  return {p.D1 * e.d1 + (p.C1 - 1) * e.r1, Rat(e.r1 + e.r2)};
}

QC zr_charge(const GammaParams& p, const TripleClass& e) {
  p.validate();
  return {p.A1 * e.d1 + p.B1 * e.r1 - e.d2,
          p.D1 * e.d1 + p.C1 * e.r1 + e.r2};
}

double heart_index_r(const GammaParams& p) {
  return std::atan2(to_double(p.D1), to_double(p.C1)) / M_PI;
}

double r3(const GammaParams& p) {
  return std::atan2(to_double(p.D1), to_double(p.C1) + 1.0) / M_PI;
}

bool lambda_gt_threshold(const GammaParams& p, const TripleClass& e) {
  if (e.r1 + e.r2 <= 0 && !weak_charge(p, e).is_zero())
    throw domain_error(errc::degenerate_phase,
                       "weak phase needs r1 + r2 > 0 on this class");
  return -p.D1 * e.d1 - p.C1 * e.r1 - e.r2 > 0;
}

DistinguishedTable distinguished_phases(const GammaParams& p) {
  p.validate();
  // Constituent 1 has charge matrix M; its heart datum C1 + D1 i lies in
  // the lower half plane (D1 < 0), so the Iwasawa angle is in (pi, 2pi) and
  // branch -1 puts f1(0) = r in (-1, 0).  Constituent 2 is sigma_mu.
  // Constituent 3 has matrix M + I with datum (C1+1) + D1 i, again lower
  // half plane, branch -1.
  const LiftedElement g1 = element_from_charge(CurveCharge{p.M()}, -1);
  const LiftedElement g3 =
      element_from_charge(CurveCharge{p.M() + Matrix2::identity()}, -1);

  DistinguishedTable t;
  const double phi0 = inverse_lift(g1, 1.0);
  const double phi1 = inverse_lift(g1, 0.5);
  const double phi2 = 1.0;
  const double phi3 = 0.5;
  const double phi4 = inverse_lift(g3, 1.0);
  const double phi5 = inverse_lift(g3, 0.5);

  auto shift_of = [](double phase) {
    return static_cast<int>(-(std::ceil(phase) - 1));
  };
  t.rows = {DistinguishedPhase{"i C(x)", shift_of(phi0), phi0},
            DistinguishedPhase{"i O", shift_of(phi1), phi1},
            DistinguishedPhase{"j C(x)", 0, phi2},
            DistinguishedPhase{"j O", 0, phi3},
            DistinguishedPhase{"l C(x)", shift_of(phi4), phi4},
            DistinguishedPhase{"l O", shift_of(phi5), phi5}};

  if (phi1 < 1.5) {
    t.i_structure_stable = true;
    t.j_structure_stable = true;
    t.l_structure_stable = (0.5 < phi5 && phi5 < phi1);
  } else if (phi5 > 0.5) {
    t.i_structure_stable = false;
    t.j_structure_stable = true;
    t.l_structure_stable = true;
  } else {
    t.i_structure_stable = true;
    t.j_structure_stable = false;
    t.l_structure_stable = true;
  }
  return t;
}

}  // namespace triples
