#include "triples/cover.hpp"

#include <cmath>

namespace triples {

namespace {

constexpr double kPi = M_PI;
constexpr double kTwoPi = 2.0 * M_PI;

struct Mat2d {
  double a, b, c, d;
};

Mat2d to_doubles(const Matrix2& m) {
  return {to_double(m.a), to_double(m.b), to_double(m.c), to_double(m.d)};
}

// Angle of T . (cos(pi t), sin(pi t)), principal value in (-pi, pi].
double image_angle(const Mat2d& T, double t) {
  const double cx = std::cos(kPi * t), sx = std::sin(kPi * t);
  return std::atan2(T.c * cx + T.d * sx, T.a * cx + T.b * sx);
}

double wrap_two_pi(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r;
}

long long round_ll(double x) { return static_cast<long long>(std::llround(x)); }

}  // namespace

Matrix2 Matrix2::inverse() const {
  Rat dt = det();
  if (dt == 0)
    throw domain_error(errc::non_positive_determinant, "singular 2x2 matrix");
  return {d / dt, -b / dt, -c / dt, a / dt};
}

IwasawaDecomposition iwasawa(const Matrix2& T) {
  if (T.det() <= 0)
    throw domain_error(errc::non_positive_determinant,
                       "Iwasawa decomposition needs det(T) > 0");
  const Mat2d t = to_doubles(T);
  const double ka = std::hypot(t.a, t.c);  // k*a, first column length
  double phi = std::atan2(t.c, t.a);
  if (phi < 0) phi += kTwoPi;
  const double cphi = std::cos(phi), sphi = std::sin(phi);
  const double k_over_a = -sphi * t.b + cphi * t.d;  // = det / (k a) > 0
  const double kax = cphi * t.b + sphi * t.d;        // = k a x
  IwasawaDecomposition w;
  w.k = std::sqrt(ka * k_over_a);
  w.a = ka / w.k;
  w.x = kax / ka;
  w.phi = phi == kTwoPi ? 0.0 : phi;
  return w;
}

double lift_at_zero(const LiftedElement& g) {
  return 2.0 * static_cast<double>(g.branch) + iwasawa(g.T).phi / kPi;
}

double eval_lift(const LiftedElement& g, double t) {
  if (g.T.det() <= 0)
    throw domain_error(errc::non_positive_determinant, "lift needs det(T) > 0");
  const double n = std::floor(t);
  const double s = t - n;
  const Mat2d T = to_doubles(g.T);
  const double theta0 = image_angle(T, 0.0);
  const double thetas = image_angle(T, s);
  // For s in [0,1) the ray rotates by an angle in [0, pi); values wrapped
  // near 2*pi are roundoff below zero.
  double delta = wrap_two_pi(thetas - theta0);
  if (delta > 1.75 * kPi) delta -= kTwoPi;
  return lift_at_zero(g) + n + delta / kPi;
}

double inverse_lift(const LiftedElement& g, double y) {
  // The ray that T sends to direction pi*y, branch pinned by f.
  const Matrix2 Tinv_exact = g.T.inverse();
  const Mat2d Ti = to_doubles(Tinv_exact);
  const double cy = std::cos(kPi * y), sy = std::sin(kPi * y);
  const double sp =
      std::atan2(Ti.c * cy + Ti.d * sy, Ti.a * cy + Ti.b * sy) / kPi;
  const double u = eval_lift(g, sp);  // == y (mod 2)
  const double k = std::round((y - u) / 2.0);
  return sp + 2.0 * k;
}

LiftedElement compose(const LiftedElement& g, const LiftedElement& h) {
  LiftedElement out;
  out.T = g.T * h.T;
  out.branch = 0;
  const double f0 = eval_lift(g, lift_at_zero(h));
  out.branch = round_ll((f0 - iwasawa(out.T).phi / kPi) / 2.0);
  return out;
}

LiftedElement invert(const LiftedElement& g) {
  LiftedElement out;
  out.T = g.T.inverse();
  if (out.T.det() <= 0)
    throw domain_error(errc::non_positive_determinant, "invert needs det > 0");
  const double f0 = inverse_lift(g, 0.0);
  out.branch = round_ll((f0 - iwasawa(out.T).phi / kPi) / 2.0);
  return out;
}

LiftedElement shift(const LiftedElement& g, long long n) {
  LiftedElement out = g;
  if (n % 2 == 0) {
    out.branch += n / 2;
    return out;
  }
  out.T = -g.T;
  const double f0 = lift_at_zero(g) + static_cast<double>(n);
  out.branch = round_ll((f0 - iwasawa(out.T).phi / kPi) / 2.0);
  return out;
}

QC charge_eval(const CurveCharge& Z, const CurveClass& x) {
  const Rat md(-x.d), r(x.r);
  return {Z.M.a * md + Z.M.b * r, Z.M.c * md + Z.M.d * r};
}

LiftedElement element_from_charge(const CurveCharge& Z, long long branch) {
  if (Z.M.det() <= 0)
    throw domain_error(errc::non_positive_determinant,
                       "charge matrix needs det > 0");
  return {Z.M.inverse(), branch};
}

CurveCharge charge_of_element(const LiftedElement& g) {
  return {g.T.inverse()};
}

RhoPoint rho(const LiftedElement& g) {
  if (g.T.det() <= 0)
    throw domain_error(errc::non_positive_determinant, "rho needs det(T) > 0");
  const Matrix2 M = g.T.inverse();
  // Charges of the skyscraper (0,1) and structure sheaf (1,0) classes.
  const Mat2d m = to_doubles(M);
  const double v0x = -m.a, v0y = -m.c;  // M . (-1, 0)
  const double v1x = m.b, v1y = m.d;    // M . (0, 1)
  RhoPoint p;
  p.m0 = std::hypot(v0x, v0y);
  p.m1 = std::hypot(v1x, v1y);
  const double s0 = std::atan2(v0y, v0x) / kPi;
  const double s1 = std::atan2(v1y, v1x) / kPi;
  const double u0 = eval_lift(g, s0);  // == 1 (mod 2)
  const double u1 = eval_lift(g, s1);  // == 1/2 (mod 2)
  p.phi0 = s0 + 2.0 * std::round((1.0 - u0) / 2.0);
  p.phi1 = s1 + 2.0 * std::round((0.5 - u1) / 2.0);
  return p;
}

LiftedElement rho_inverse(const RhoPoint& p) {
  if (!(p.m0 > 0) || !(p.m1 > 0))
    throw domain_error(errc::invalid_region, "masses must be positive");
  if (!(p.phi1 < p.phi0 && p.phi0 < p.phi1 + 1))
    throw domain_error(errc::invalid_region,
                       "phases must satisfy phi1 < phi0 < phi1 + 1");
  // Column 1 of M is -m0 e(phi0), column 2 is m1 e(phi1); then T = M^{-1}.
  const Matrix2 M = Matrix2::from_doubles(
      -p.m0 * std::cos(kPi * p.phi0), p.m1 * std::cos(kPi * p.phi1),
      -p.m0 * std::sin(kPi * p.phi0), p.m1 * std::sin(kPi * p.phi1));
  LiftedElement g{M.inverse(), 0};
  const double u = eval_lift(g, p.phi0);  // == 1 (mod 2)
  g.branch = round_ll((1.0 - u) / 2.0);
  return g;
}

HeartDescriptor heart_descriptor(const LiftedElement& g) {
  const double f0 = lift_at_zero(g);
  double n = std::floor(f0);
  double theta = f0 - n;
  if (theta >= 1.0) {  // roundoff at the seam
    n += 1.0;
    theta = 0.0;
  }
  return {static_cast<long long>(n), theta};
}

}  // namespace triples
