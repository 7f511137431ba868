#include "triples/glue.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace triples;
using test::shear;

TEST_CASE("gluing inequalities") {
  CHECK(check_gluing(Sod::s12, 0.5, 0));
  CHECK(!check_gluing(Sod::s12, -0.5, 0));
  CHECK(check_gluing(Sod::s31, 1.2, 0.1));
  CHECK(!check_gluing(Sod::s31, 1.0, 0.1));
  CHECK(check_gluing(Sod::s23, 1.1, 0.1));
  CHECK(check_gluing(Sod::s12, 0.0, 0.0));  // boundary allowed
}

TEST_CASE("glued charge for the standard pair") {
  GluedDescriptor d;
  d.sod = Sod::s12;
  d.Z1 = d.Z2 = CurveCharge::mu();
  CHECK(glued_charge(d, {1, 2, 3, 4}) == QC{-6, 4});
}

TEST_CASE("alpha charge closed form") {
  CHECK(glued_charge(alpha_charge(0), {1, 1, 1, 1}) == QC{-2, 2});
  CHECK(glued_charge(alpha_charge(2), {1, 0, 0, 0}) == QC{-2, 1});
  CHECK(glued_charge(alpha_charge(1), {1, 0, 0, 0}).re == Rat(-1));
  CHECK(glued_charge(alpha_charge(1), {0, 0, 0, 1}) == QC{-1, 0});

  test::RatGen gen(43);
  for (int it = 0; it < 300; ++it) {
    const Rat alpha = gen();
    const TripleClass e = test::random_class(gen.rng, 25);
    const QC z = glued_charge(alpha_charge(alpha), e);
    CHECK(z.re == Rat(-e.d1) - e.d2 - alpha * e.r1);
    CHECK(z.im == Rat(e.r1 + e.r2));
  }
}

TEST_CASE("glued charge is additive, all decompositions") {
  test::RatGen gen(47);
  for (Sod sod : {Sod::s12, Sod::s23, Sod::s31}) {
    for (int it = 0; it < 100; ++it) {
      GluedDescriptor d;
      d.sod = sod;
      d.Z1 = CurveCharge{test::random_posdet(gen)};
      d.Z2 = CurveCharge{test::random_posdet(gen)};
      const TripleClass e = test::random_class(gen.rng, 20);
      const TripleClass f = test::random_class(gen.rng, 20);
      CHECK(glued_charge(d, e + f) == glued_charge(d, e) + glued_charge(d, f));
      CHECK(glued_charge(d, -e) == -glued_charge(d, e));
    }
  }
}

TEST_CASE("glued charge sums the decomposition triangle pieces") {
  test::RatGen gen(53);
  for (Sod sod : {Sod::s12, Sod::s23, Sod::s31}) {
    GluedDescriptor d;
    d.sod = sod;
    d.Z1 = CurveCharge{test::random_posdet(gen)};
    d.Z2 = CurveCharge{test::random_posdet(gen)};
    // On classes of the first factor the charge restricts to Z1, on the
    // second to Z2.
    const CurveClass x{3, -2};
    Embedding first{}, second{};
    switch (sod) {
      case Sod::s12: first = Embedding::i; second = Embedding::j; break;
      case Sod::s23: first = Embedding::j; second = Embedding::l; break;
      case Sod::s31: first = Embedding::l; second = Embedding::i; break;
    }
    CHECK(glued_charge(d, embed(first, x)) == charge_eval(d.Z1, x));
    CHECK(glued_charge(d, embed(second, x)) == charge_eval(d.Z2, x));
  }
}

TEST_CASE("S(a) membership") {
  const LiftedElement id0 = LiftedElement::identity();
  const LiftedElement n1{shear(1), 0};
  CHECK(!in_S_a(n1, id0, 0.5));  // f1 dips below the identity on (0,1)
  CHECK(in_S_a(shift(id0, 1), id0, 0.25));  // f(0) = 1
  CHECK(in_S_a(LiftedElement{Matrix2::identity(), 1}, id0, 0.7));
  CHECK(in_S_a(id0, id0, 0.5));  // equality allowed
  CHECK_THROWS_AS(in_S_a(id0, id0, 0.0), domain_error);
  CHECK_THROWS_AS(in_S_a(id0, id0, 1.0), domain_error);
}

// Right action transports the two S(a) inequalities to the pulled-back
// sample points, and the glued charge transports to the conjugated one.
TEST_CASE("S(a) data transports along the right action") {
  test::RatGen gen(59);
  for (int it = 0; it < 60; ++it) {
    const LiftedElement g1{test::random_posdet(gen), 1};  // generous branch
    const LiftedElement g2{test::random_posdet(gen), 0};
    const LiftedElement h{test::random_posdet(gen), 0};
    const double a = 0.3;
    const LiftedElement t1 = compose(g1, h), t2 = compose(g2, h);
    // Inequalities of the transported pair at t equal the originals at h(t).
    for (double t : {0.0, a}) {
      const double lhs = eval_lift(t1, t) - eval_lift(t2, t);
      const double rhs =
          eval_lift(g1, eval_lift(h, t)) - eval_lift(g2, eval_lift(h, t));
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
    // Charge side: the glued charge of the transported pair is M_h applied
    // to the glued charge, exactly.
    GluedDescriptor d;
    d.sod = Sod::s12;
    d.Z1 = charge_of_element(g1);
    d.Z2 = charge_of_element(g2);
    GluedDescriptor dt = d;
    const Matrix2 Mh = h.T.inverse();
    dt.Z1 = CurveCharge{Mh * d.Z1.M};
    dt.Z2 = CurveCharge{Mh * d.Z2.M};
    const TripleClass e = test::random_class(gen.rng, 15);
    const QC z = glued_charge(d, e);
    const QC zt = glued_charge(dt, e);
    CHECK(zt.re == Mh.a * z.re + Mh.b * z.im);
    CHECK(zt.im == Mh.c * z.re + Mh.d * z.im);
  }
}

TEST_CASE("HN rationality predicate") {
  CHECK(hn_rational(HeartSlope::infinite(), HeartSlope::infinite()));
  CHECK(hn_rational(HeartSlope::finite(Rat(-1)), HeartSlope::infinite()));
  CHECK(!hn_rational(HeartSlope::irrational(), HeartSlope::infinite()));
  CHECK(!hn_rational(HeartSlope::finite(Rat(3, 7)), HeartSlope::irrational()));
}

TEST_CASE("jealousy band") {
  using V = RecollementVerdict;
  CHECK(jealousy(Rat(-3, 10), Rat(0)) == V::no_stability_function);
  CHECK(jealousy(Rat(0), Rat(0)) == V::admits);
  CHECK(jealousy(Rat(-1), Rat(0)) == V::admits);  // gluing extreme
  // Exact rational boundaries.
  CHECK(jealousy(Rat(2, 3) - 1, Rat(2, 3)) == V::admits);
  CHECK(jealousy(Rat(2, 3), Rat(2, 3)) == V::admits);
  CHECK(jealousy(Rat(2, 3) - Rat(1, 1000000), Rat(2, 3)) ==
        V::no_stability_function);
  CHECK(jealousy(Rat(-999999, 1000000), Rat(0)) == V::no_stability_function);
}

TEST_CASE("heart tags of the constituents") {
  const GluedDescriptor d0 = alpha_charge(0);
  const auto [t1, t2] = heart_tags(d0);
  CHECK(t1.n == 0);
  CHECK(t1.theta == doctest::Approx(0).epsilon(1e-12));
  CHECK(t2.n == 0);

  GluedDescriptor d = d0;
  d.branch1 = 1;
  const auto [s1, s2] = heart_tags(d);
  CHECK(s1.n == 2);  // even shift moves the heart two steps
  CHECK(gluing_ok(d));
  CHECK(gluing_ok(d0));  // boundary f1(0) = f2(0) = 0
}
