#include "triples/support.hpp"

#include "triples/serre.hpp"

namespace triples {

namespace {

using Vec4 = std::array<Rat, 4>;

// Q(x) = (u.x)(v.x) as a symmetric matrix.
QuadForm4 sym_product(const Vec4& u, const Vec4& v) {
  QuadForm4 q;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      q.m[i][j] = (u[i] * v[j] + u[j] * v[i]) / 2;
  return q;
}

QuadForm4 add(const QuadForm4& a, const QuadForm4& b) {
  QuadForm4 q;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) q.m[i][j] = a.m[i][j] + b.m[i][j];
  return q;
}

QuadForm4 scale(const QuadForm4& a, const Rat& s) {
  QuadForm4 q;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) q.m[i][j] = a.m[i][j] * s;
  return q;
}

// Functionals of a curve charge applied through a projection to the first
// (i) or second (j) block, as 4-vectors over (r1,d1,r2,d2).
Vec4 re_on_first(const CurveCharge& Z) { return {Z.B(), Z.A(), 0, 0}; }
Vec4 im_on_first(const CurveCharge& Z) { return {Z.C(), Z.D(), 0, 0}; }
Vec4 re_on_second(const CurveCharge& Z) { return {0, 0, Z.B(), Z.A()}; }
Vec4 im_on_second(const CurveCharge& Z) { return {0, 0, Z.C(), Z.D()}; }

}  // namespace

Rat QuadForm4::eval(const TripleClass& e) const {
  return eval_vec({Rat(e.r1), Rat(e.d1), Rat(e.r2), Rat(e.d2)});
}

Rat QuadForm4::eval_vec(const std::array<Rat, 4>& v) const {
  Rat s = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s += m[i][j] * v[i] * v[j];
  return s;
}

Rat QuadForm4::pair(const std::array<Rat, 4>& u,
                    const std::array<Rat, 4>& v) const {
  Rat s = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s += m[i][j] * u[i] * v[j];
  return s;
}

bool QuadForm4::symmetric() const {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (m[i][j] != m[j][i]) return false;
  return true;
}

QuadForm4 build_Q(const SupportRegime& regime) {
  if (const auto* r = std::get_if<StrongOrth>(&regime)) {
    if (!(r->Z1.M.det() > 0) || !(r->Z2.M.det() > 0))
      throw domain_error(errc::regime_violation,
                         "constituent charges need det > 0");
    // Q = Im Z1 . Im Z2 + Re Z1 . Re Z2
    return add(sym_product(im_on_first(r->Z1), im_on_second(r->Z2)),
               sym_product(re_on_first(r->Z1), re_on_second(r->Z2)));
  }
  if (const auto* r = std::get_if<SameHeartUpper>(&regime)) {
    if (!(r->C > 0))
      throw domain_error(errc::regime_violation, "C > 0 required");
    if (!(r->A < 0))
      throw domain_error(errc::regime_violation, "A < 0 required");
    if (r->B == 0)
      throw domain_error(errc::regime_violation, "delta undefined when B = 0");
    const Rat delta = -r->C * r->A / (r->B * r->B);
    const CurveCharge Z1{Matrix2{-r->A, r->B, 0, r->C}};
    const CurveCharge Zmu = CurveCharge::mu();
    // Q = -Re Z1 . Im Z2 + Im Z1 . Re Z2 + Im Z1 . Im Z2
    //     + delta Re Z1 . Re Z2
    QuadForm4 q = scale(
        sym_product(re_on_first(Z1), im_on_second(Zmu)), Rat(-1));
    q = add(q, sym_product(im_on_first(Z1), re_on_second(Zmu)));
    q = add(q, sym_product(im_on_first(Z1), im_on_second(Zmu)));
    q = add(q, scale(sym_product(re_on_first(Z1), re_on_second(Zmu)), delta));
    return q;
  }
  if (const auto* r = std::get_if<GluedNegDisc>(&regime)) {
    const Rat disc = (r->A + r->C) * (r->A + r->C) - 4 * r->B * r->D;
    if (!(disc < 0))
      throw domain_error(errc::regime_violation, "discriminant >= 0");
    if (!(r->D > 0))
      throw domain_error(errc::regime_violation, "D > 0 required");
    if (!(r->B > 0))
      throw domain_error(errc::regime_violation, "B > 0 required");
    // Q = -Im Z2(j) Re Z2(i) + Im Z2(i) Re Z2(j) with Z2 = Z_mu, i.e.
    // Q(e) = d1 r2 - d2 r1.  Its kernel restriction is
    // -(D d^2 + (A+C) d r + B r^2), negative definite under the regime.
    const CurveCharge Zmu = CurveCharge::mu();
    QuadForm4 q = scale(
        sym_product(im_on_second(Zmu), re_on_first(Zmu)), Rat(-1));
    q = add(q, sym_product(im_on_first(Zmu), re_on_second(Zmu)));
    return q;
  }
  const auto& r = std::get<GammaEuler>(regime);
  if (r.genus != 1)
    throw domain_error(errc::regime_violation,
                       "Euler regime is certified at genus 1 only");
  r.p.validate();
  // The kernel restriction is D1 d^2 + (A1+C1) d r + B1 r^2, which is
  // negative definite exactly when the discriminant of M is negative; the
  // regime covers the non-gluing charges only.
  const Matrix2 M = r.p.M();
  if (!(M.trace() * M.trace() - 4 * M.det() < 0))
    throw domain_error(errc::regime_violation, "discriminant >= 0");
  // Q(e) = d2 r1 - d1 r2
  QuadForm4 q;
  q.m[0][3] = q.m[3][0] = Rat(1, 2);
  q.m[1][2] = q.m[2][1] = Rat(-1, 2);
  return q;
}

namespace {

// Kernel of the 2x4 rational system; exactly 2-dimensional or throws.
std::array<Vec4, 2> charge_kernel(const ChargeFunctionals& f) {
  Rat rows[2][4];
  for (int j = 0; j < 4; ++j) {
    rows[0][j] = f.re[j];
    rows[1][j] = f.im[j];
  }
  int pivot_col[2] = {-1, -1};
  int rank = 0;
  for (int col = 0; col < 4 && rank < 2; ++col) {
    int p = -1;
    for (int r = rank; r < 2; ++r)
      if (rows[r][col] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    for (int j = 0; j < 4; ++j) std::swap(rows[p][j], rows[rank][j]);
    const Rat lead = rows[rank][col];
    for (int j = 0; j < 4; ++j) rows[rank][j] /= lead;
    for (int r = 0; r < 2; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rat m = rows[r][col];
      for (int j = 0; j < 4; ++j) rows[r][j] -= m * rows[rank][j];
    }
    pivot_col[rank] = col;
    ++rank;
  }
  if (rank < 2)
    throw domain_error(errc::degenerate_charge,
                       "charge functionals are linearly dependent");

  std::array<Vec4, 2> basis;
  int b = 0;
  for (int col = 0; col < 4; ++col) {
    if (col == pivot_col[0] || col == pivot_col[1]) continue;
    Vec4 v{Rat(0), Rat(0), Rat(0), Rat(0)};
    v[col] = 1;
    for (int r = 0; r < 2; ++r) v[pivot_col[r]] = -rows[r][col];
    basis[b++] = v;
  }
  return basis;
}

Vec4 combine(const Vec4& u, const Rat& s, const Vec4& v, const Rat& t) {
  Vec4 w;
  for (int i = 0; i < 4; ++i) w[i] = s * u[i] + t * v[i];
  return w;
}

}  // namespace

KernelCertificate kernel_negdef(const QuadForm4& Q, const StabDescriptor& Z) {
  const auto basis = charge_kernel(charge_functionals(Z));
  const Rat g11 = Q.eval_vec(basis[0]);
  const Rat g12 = Q.pair(basis[0], basis[1]);
  const Rat g22 = Q.eval_vec(basis[1]);

  KernelCertificate cert;
  cert.kernel_basis = basis;
  cert.minor1 = -g11;                  // leading minors of -G
  cert.minor2 = g11 * g22 - g12 * g12; // det(G) = det(-G)
  cert.certified = (cert.minor1 > 0 && cert.minor2 > 0);
  if (!cert.certified) {
    if (g11 >= 0) {
      cert.counterexample = basis[0];
    } else {
      // Maximum of G11 t^2 + 2 G12 t + G22 at t = -G12/G11 has value
      // -det(G)/G11 >= 0 when det(G) <= 0.
      cert.counterexample = combine(basis[0], -g12 / g11, basis[1], Rat(1));
    }
  }
  return cert;
}

std::vector<FamilyValue> q_on_distinguished(const QuadForm4& Q) {
  struct Family {
    const char* name;
    Vec4 u, v;
  };
  const Family fams[3] = {
      {"i", {1, 0, 0, 0}, {0, 1, 0, 0}},
      {"j", {0, 0, 1, 0}, {0, 0, 0, 1}},
      {"l", {1, 0, 1, 0}, {0, 1, 0, 1}},
  };
  std::vector<FamilyValue> out;
  for (const auto& f : fams) {
    FamilyValue fv;
    fv.family = f.name;
    fv.c_rr = Q.eval_vec(f.u);
    fv.c_rd = 2 * Q.pair(f.u, f.v);
    fv.c_dd = Q.eval_vec(f.v);
    out.push_back(fv);
  }
  return out;
}

namespace {

SlopeInterval cotassp_direct(const Rat& A, const Rat& B, const Rat& C,
                             const TripleClass& e) {
  const Rat x = Rat(e.d1) / e.r1;
  const Rat y = Rat(e.d2) / e.r2;
  SlopeInterval iv;
  iv.lo = C * y + A * x;
  iv.hi = (A * x + C * y + y - x - Rat(e.r1) / e.r2 * x * (A + C)) *
          Rat(e.r2) / (e.r2 - e.r1);
  iv.contains_minus_B = (iv.lo <= -B && -B <= iv.hi);
  return iv;
}

}  // namespace

SlopeInterval cotassp_interval(const Rat& A, const Rat& B, const Rat& C,
                               const TripleClass& e) {
  if (!(C > 0) || !(A < 0))
    throw domain_error(errc::regime_violation, "needs C > 0 and A < 0");
  if (e.r1 == e.r2)
    throw domain_error(errc::rank_constraint, "r1 != r2 required");
  if (e.r1 <= 0 || e.r2 <= 0)
    throw domain_error(errc::rank_constraint, "positive ranks required");
  if (e.r2 > e.r1) return cotassp_direct(A, B, C, e);

  // r1 > r2: transport through the derived dual.  The dual datum has
  // parameters (1/A, -B/(AC), 1/C) and the dual class swaps blocks and
  // negates degrees; the window for -B' = B/(AC) maps back by the negative
  // factor AC.
  const Rat Ad = 1 / A, Bd = -B / (A * C), Cd = 1 / C;
  const SlopeInterval dual_iv = cotassp_direct(Ad, Bd, Cd, dual_class(e));
  const Rat s = -A * C;  // > 0
  SlopeInterval iv;
  iv.lo = s * dual_iv.lo;
  iv.hi = s * dual_iv.hi;
  iv.contains_minus_B = (iv.lo <= -B && -B <= iv.hi);
  return iv;
}

bool lstar_line_bundle_stable(const Matrix2& M, long long d) {
  const Rat A = -M.a, B = M.b, D = -M.c, C = M.d;
  if (C + D * d < 0)
    throw domain_error(errc::heart_violation,
                       "i(L) outside the heart: C + D d < 0");
  return -D * d * d - (A + C) * d - B > 0;
}

std::vector<InequalityCheck> necessary_chain(const Rat& A, const Rat& B,
                                             const Rat& C,
                                             const TripleClass& e) {
  if (e.is_zero())
    return {{"IBGG", true}, {"IIBGG", true}, {"IE1GG", true}};
  const Rat denom = C * e.r1 + e.r2;
  if (denom == 0)
    throw domain_error(errc::undefined_slope, "C r1 + r2 = 0");
  const Rat mu = (-A * e.d1 - B * e.r1 + e.d2) / denom;
  std::vector<InequalityCheck> out;
  out.push_back({"IBGG", -B >= (A + C) * mu});
  out.push_back({"IIBGG", -A * e.d1 + e.d2 - mu * (e.r2 - A * e.r1) <= 0});
  out.push_back({"IE1GG", (e.r2 - e.r1) * mu <= e.d2 - e.d1});
  return out;
}

}  // namespace triples
