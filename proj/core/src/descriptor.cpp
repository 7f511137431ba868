#include "triples/descriptor.hpp"

namespace triples {

StabDescriptor StabDescriptor::tilted(const GammaParams& p) {
  p.validate();
  GluedDescriptor d;
  d.sod = Sod::s12;
  d.Z1 = CurveCharge{p.M()};
  d.Z2 = CurveCharge::mu();
  d.branch1 = -1;  // f1(0) = r in (-1, 0)
  d.branch2 = 0;
  return {d, HeartKind::tilted_gamma};
}

const char* heart_tag(const StabDescriptor& d) {
  if (d.kind == HeartKind::tilted_gamma) return "tiltedGamma";
  switch (d.data.sod) {
    case Sod::s12: return "glued12";
    case Sod::s23: return "glued23";
    case Sod::s31: return "glued31";
  }
  return "glued";
}

QC charge(const StabDescriptor& d, const TripleClass& e) {
  return glued_charge(d.data, e);
}

ChargeFunctionals charge_functionals(const StabDescriptor& d) {
  ChargeFunctionals f;
  const TripleClass basis[4] = {
      {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  for (int k = 0; k < 4; ++k) {
    QC z = charge(d, basis[k]);
    f.re[k] = z.re;
    f.im[k] = z.im;
  }
  return f;
}

GammaParams gamma_params(const StabDescriptor& d) {
  if (d.kind != HeartKind::tilted_gamma || d.data.sod != Sod::s12 ||
      !(d.data.Z2 == CurveCharge::mu()))
    throw domain_error(errc::shape_violation,
                       "tilted parameters need the 12-shape with Z2 = Z_mu");
  const Matrix2& M = d.data.Z1.M;
  GammaParams p{-M.a, M.b, M.d, -M.c};
  p.validate();
  return p;
}

}  // namespace triples
