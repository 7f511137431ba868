#include "triples/support.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace triples;

namespace {

StabDescriptor glued12(const CurveCharge& Z1, const CurveCharge& Z2) {
  GluedDescriptor d;
  d.sod = Sod::s12;
  d.Z1 = Z1;
  d.Z2 = Z2;
  return StabDescriptor::glued(d);
}

const GammaParams kRot{0, -1, 0, -1};  // M = [[0,-1],[1,0]]

}  // namespace

TEST_CASE("euler regime quadratic form") {
  const QuadForm4 Q = build_Q(GammaEuler{kRot, 1});
  CHECK(Q.symmetric());
  CHECK(Q.eval({1, 0, 1, 1}) == Rat(1));
  std::mt19937_64 rng(163);
  for (int it = 0; it < 400; ++it) {
    const TripleClass e = test::random_class(rng, 60);
    CHECK(Q.eval(e) == Rat(e.d2 * e.r1 - e.d1 * e.r2));
  }
  for (const FamilyValue& f : q_on_distinguished(Q)) {
    CHECK(f.c_rr == 0);
    CHECK(f.c_rd == 0);
    CHECK(f.c_dd == 0);
  }
  CHECK_THROWS_WITH_AS(build_Q(GammaEuler{kRot, 2}),
                       "RegimeViolation: Euler regime is certified at genus 1 "
                       "only",
                       domain_error);
}

TEST_CASE("same-heart regime form and delta") {
  // A=-1, B=-1, C=1: delta = -CA/B^2 = 1.
  const SameHeartUpper r{-1, -1, 1};
  const QuadForm4 Q = build_Q(r);
  CHECK(Q.symmetric());
  std::mt19937_64 rng(167);
  for (int it = 0; it < 300; ++it) {
    const TripleClass e = test::random_class(rng, 30);
    // Expanded coordinate form with these parameters.
    const Rat expected = Rat(e.d1 * e.r2 + 2 * e.r1 * e.r2 + e.d1 * e.d2);
    CHECK(Q.eval(e) == expected);
  }
  CHECK_THROWS_AS(build_Q(SameHeartUpper{-1, 0, 1}), domain_error);
  CHECK_THROWS_AS(build_Q(SameHeartUpper{1, -1, 1}), domain_error);
  CHECK_THROWS_AS(build_Q(SameHeartUpper{-1, -1, -1}), domain_error);
}

TEST_CASE("strong orthogonality form vanishes on one-sided classes") {
  test::RatGen gen(173);
  const StrongOrth r{CurveCharge{test::random_posdet(gen)},
                     CurveCharge{test::random_posdet(gen)}};
  const QuadForm4 Q = build_Q(r);
  for (int it = 0; it < 100; ++it) {
    const TripleClass pure_j{0, 0, test::random_entry(gen.rng, 20),
                             test::random_entry(gen.rng, 20)};
    const TripleClass pure_i{test::random_entry(gen.rng, 20),
                             test::random_entry(gen.rng, 20), 0, 0};
    CHECK(Q.eval(pure_j) == 0);  // Z1 vanishes there
    CHECK(Q.eval(pure_i) == 0);  // Z2 vanishes there
  }
}

TEST_CASE("kernel certification for the euler regime") {
  const QuadForm4 Q = build_Q(GammaEuler{kRot, 1});
  const StabDescriptor desc = StabDescriptor::tilted(kRot);
  const KernelCertificate cert = kernel_negdef(Q, desc);
  CHECK(cert.certified);
  CHECK(cert.minor1 > 0);
  CHECK(cert.minor2 > 0);
  // Basis vectors really solve Z = 0 and the restriction is -(a^2 + b^2).
  const ChargeFunctionals f = charge_functionals(desc);
  for (const auto& v : cert.kernel_basis) {
    Rat re = 0, im = 0;
    for (int i = 0; i < 4; ++i) {
      re += f.re[i] * v[i];
      im += f.im[i] * v[i];
    }
    CHECK(re == 0);
    CHECK(im == 0);
    CHECK(Q.eval_vec(v) < 0);
  }
}

TEST_CASE("kernel certification for the glued regimes") {
  test::RatGen gen(179);
  int done = 0;
  while (done < 100) {
    const Rat A = gen(), B = gen(), C = gen(), D = gen();
    if (!(B > 0) || !(D > 0)) continue;
    if (!((A + C) * (A + C) - 4 * B * D < 0)) continue;
    ++done;
    const GluedNegDisc r{A, B, C, D};
    const QuadForm4 Q = build_Q(r);
    const StabDescriptor desc =
        glued12(CurveCharge{Matrix2{-A, B, -D, C}}, CurveCharge::mu());
    CHECK(kernel_negdef(Q, desc).certified);
  }
  done = 0;
  while (done < 100) {
    const Rat A = gen(), B = gen(), C = gen();
    if (!(A < 0) || !(C > 0) || B == 0) continue;
    ++done;
    const SameHeartUpper r{A, B, C};
    const StabDescriptor desc =
        glued12(CurveCharge{Matrix2{-A, B, 0, C}}, CurveCharge::mu());
    CHECK(kernel_negdef(build_Q(r), desc).certified);
  }
}

TEST_CASE("sign-flipped form yields an explicit counterexample") {
  QuadForm4 Q = build_Q(GammaEuler{kRot, 1});
  for (auto& row : Q.m)
    for (auto& cell : row) cell = -cell;
  const StabDescriptor desc = StabDescriptor::tilted(kRot);
  const KernelCertificate cert = kernel_negdef(Q, desc);
  CHECK(!cert.certified);
  REQUIRE(cert.counterexample.has_value());
  const auto& v = *cert.counterexample;
  bool nonzero = false;
  for (const Rat& q : v) nonzero = nonzero || q != 0;
  CHECK(nonzero);
  CHECK(Q.eval_vec(v) >= 0);
  const ChargeFunctionals f = charge_functionals(desc);
  Rat re = 0, im = 0;
  for (int i = 0; i < 4; ++i) {
    re += f.re[i] * v[i];
    im += f.im[i] * v[i];
  }
  CHECK(re == 0);
  CHECK(im == 0);
}

TEST_CASE("degenerate charges are rejected") {
  // Singular constituent blocks make Re and Im proportional.
  const CurveCharge bad{Matrix2{1, 1, 1, 1}};
  const StabDescriptor desc = glued12(bad, bad);
  CHECK_THROWS_AS(kernel_negdef(build_Q(GammaEuler{kRot, 1}), desc),
                  domain_error);
}

TEST_CASE("existence interval, direct and dual") {
  // Alpha regime: A = -1, C = 1, B = -alpha.
  const SlopeInterval direct = cotassp_interval(-1, -1, 1, {1, 0, 2, 1});
  CHECK(direct.lo == Rat(1, 2));
  CHECK(direct.hi == Rat(2));
  CHECK(direct.contains_minus_B);  // alpha = 1 inside [1/2, 2]

  const SlopeInterval dual = cotassp_interval(-1, -1, 1, {2, 1, 1, 1});
  CHECK(dual.lo == Rat(1, 2));
  CHECK(dual.hi == Rat(2));

  CHECK_THROWS_AS(cotassp_interval(-1, -1, 1, {2, 1, 2, 1}), domain_error);
  CHECK_THROWS_AS(cotassp_interval(-1, -1, 1, {0, 1, 2, 1}), domain_error);
  CHECK_THROWS_AS(cotassp_interval(-1, -1, 1, {-1, 1, 2, 1}), domain_error);
}

TEST_CASE("interval equals the closed alpha form") {
  std::mt19937_64 rng(181);
  std::uniform_int_distribution<long long> rk(1, 30), dg(-30, 30);
  for (int it = 0; it < 1000; ++it) {
    long long r1 = rk(rng), r2 = rk(rng);
    if (r1 == r2) continue;
    if (r1 > r2) std::swap(r1, r2);
    const TripleClass e{r1, dg(rng), r2, dg(rng)};
    const SlopeInterval iv = cotassp_interval(-1, Rat(-7, 3), 1, e);
    const Rat y = Rat(e.d2) / e.r2, x = Rat(e.d1) / e.r1;
    CHECK(iv.lo == y - x);
    CHECK(iv.hi == (y - x) * (1 + Rat(e.r1 + e.r2) / (e.r2 - e.r1)));
  }
}

// The r1 > r2 window must agree with an inline recomputation of the dual
// transport: parameters (1/A, -B/(AC), 1/C) on the dualized class, window
// scaled back by -AC.
TEST_CASE("dual-route interval matches an independent transport") {
  std::mt19937_64 rng(409);
  std::uniform_int_distribution<long long> rk(1, 20), dg(-20, 20);
  test::RatGen gen(419);
  int done = 0;
  while (done < 300) {
    const Rat A = gen(), B = gen(), C = gen();
    if (!(A < 0) || !(C > 0)) continue;
    long long r1 = rk(rng), r2 = rk(rng);
    if (r1 <= r2) continue;
    ++done;
    const TripleClass e{r1, dg(rng), r2, dg(rng)};
    const SlopeInterval iv = cotassp_interval(A, B, C, e);

    const Rat xd = Rat(-e.d2) / e.r2, yd = Rat(-e.d1) / e.r1;
    const Rat Ad = 1 / A, Cd = 1 / C;
    const Rat lo_d = Cd * yd + Ad * xd;
    const Rat hi_d = (Ad * xd + Cd * yd + yd - xd -
                      Rat(e.r2) / e.r1 * xd * (Ad + Cd)) *
                     Rat(e.r1) / (e.r1 - e.r2);
    const Rat scale = -A * C;
    CHECK(iv.lo == scale * lo_d);
    CHECK(iv.hi == scale * hi_d);
    // Expanded form of the transported upper endpoint.
    const Rat x = Rat(e.d1) / e.r1, y = Rat(e.d2) / e.r2;
    const Rat hi_expanded = (A * x + C * y + A * C * (x - y) -
                             Rat(e.r2) / e.r1 * y * (A + C)) *
                            Rat(e.r1) / (e.r1 - e.r2);
    CHECK(iv.hi == hi_expanded);
    CHECK(iv.lo == C * y + A * x);
  }
}

TEST_CASE("interval nonempty when y >= x") {
  std::mt19937_64 rng(191);
  std::uniform_int_distribution<long long> rk(1, 20), dg(-20, 20);
  test::RatGen gen(193);
  int done = 0;
  while (done < 500) {
    const Rat A = gen(), C = gen();
    if (!(A < 0) || !(C > 0)) continue;
    long long r1 = rk(rng), r2 = rk(rng);
    if (r1 >= r2) continue;
    const TripleClass e{r1, dg(rng), r2, dg(rng)};
    if (!(Rat(e.d2) / e.r2 >= Rat(e.d1) / e.r1)) continue;
    ++done;
    const SlopeInterval iv = cotassp_interval(A, Rat(0), C, e);
    CHECK(iv.lo <= iv.hi);
  }
}

TEST_CASE("line bundle stability inequality") {
  const Matrix2 M{0, -1, 1, 0};  // A=0, B=-1, C=0, D=-1
  CHECK(lstar_line_bundle_stable(M, 0));
  CHECK(lstar_line_bundle_stable(M, -3));
  const Matrix2 flipped{0, 1, 1, 0};  // B = +1
  CHECK(!lstar_line_bundle_stable(flipped, 0));
  // Heart violation: C + D d < 0.
  CHECK_THROWS_AS(lstar_line_bundle_stable(M, 5), domain_error);
}

TEST_CASE("necessary inequality chain") {
  // alpha = 1: A = -1, B = -1, C = 1.
  const auto c1 = necessary_chain(-1, -1, 1, {1, 0, 2, 1});
  REQUIRE(c1.size() == 3);
  CHECK(c1[0].tag == "IBGG");
  CHECK(c1[0].holds);
  CHECK(c1[1].holds);
  CHECK(c1[2].holds);

  // alpha = 0 on (1,1,1,0): the rank-difference inequality fails.
  const auto c2 = necessary_chain(-1, 0, 1, {1, 1, 1, 0});
  CHECK(c2[2].tag == "IE1GG");
  CHECK(!c2[2].holds);

  const auto c3 = necessary_chain(-1, 0, 1, {0, 0, 0, 0});
  for (const auto& c : c3) CHECK(c.holds);

  CHECK_THROWS_AS(necessary_chain(-1, 0, 1, {1, 2, -1, 0}), domain_error);
}
