#include "triples/serre.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace triples;

namespace {

long long det4(const ClassAuto& m) {
  // Laplace expansion is fine for a single 4x4 integer matrix.
  auto det3 = [](long long a, long long b, long long c, long long d,
                 long long e, long long f, long long g, long long h,
                 long long i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
  };
  long long out = 0;
  for (int col = 0; col < 4; ++col) {
    long long minor[9];
    int k = 0;
    for (int r = 1; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        if (c != col) minor[k++] = m[r][c];
    const long long d3 = det3(minor[0], minor[1], minor[2], minor[3], minor[4],
                              minor[5], minor[6], minor[7], minor[8]);
    out += (col % 2 == 0 ? 1 : -1) * m[0][col] * d3;
  }
  return out;
}

}  // namespace

TEST_CASE("serre matrix is pinned by the embedded generators") {
  std::mt19937_64 rng(113);
  for (int it = 0; it < 200; ++it) {
    const CurveClass x{test::random_entry(rng, 30), test::random_entry(rng, 30)};
    CHECK(serre_class(embed(Embedding::i, x)) == embed(Embedding::j, x));
    CHECK(serre_class(embed(Embedding::j, x)) == -embed(Embedding::l, x));
    CHECK(serre_class(embed(Embedding::l, x)) == -embed(Embedding::i, x));
  }
  CHECK(det4(serre_matrix()) == 1);
}

TEST_CASE("serre class examples") {
  CHECK(serre_class({1, 0, 0, 0}) == TripleClass{0, 0, 1, 0});
  CHECK(serre_class({0, 0, 2, 5}) == TripleClass{-2, -5, -2, -5});
  TripleClass e{1, 2, 3, 4};
  CHECK(serre_class(serre_class(serre_class(e))) == e);
}

TEST_CASE("serre cube is the identity on classes") {
  std::mt19937_64 rng(127);
  for (int it = 0; it < 1000; ++it) {
    const TripleClass e = test::random_class(rng, 1000);
    const TripleClass s3 = serre_class(serre_class(serre_class(e)));
    CHECK(s3 == e);
    CHECK(serre_class_inverse(serre_class(e)) == e);
  }
}

TEST_CASE("serre duality pairing at genus one") {
  std::mt19937_64 rng(131);
  const Genus g1(1);
  for (int it = 0; it < 1000; ++it) {
    const TripleClass e = test::random_class(rng, 50);
    const TripleClass f = test::random_class(rng, 50);
    CHECK(euler_pair(g1, e, f) == euler_pair(g1, f, serre_class(e)));
  }
}

TEST_CASE("derived dual on classes") {
  CHECK(dual_class({1, 2, 1, 3}) == TripleClass{1, -3, 1, -2});
  CHECK(dual_class(dual_class({7, -5, 2, 9})) == TripleClass{7, -5, 2, 9});
  CHECK(dual_class({0, 1, 0, 1}) == TripleClass{0, -1, 0, -1});
  std::mt19937_64 rng(137);
  for (int it = 0; it < 500; ++it) {
    const TripleClass e = test::random_class(rng, 40);
    CHECK(dual_class(dual_class(e)) == e);
  }
}

TEST_CASE("dual curve charge") {
  const DualCurveCharge mu = dual_curve_charge(CurveCharge::mu(), 0.0);
  CHECK(mu.Z == CurveCharge::mu());
  CHECK(mu.shift == -1);
  CHECK(mu.theta == doctest::Approx(1.0));

  const DualCurveCharge d =
      dual_curve_charge(CurveCharge{Matrix2{1, -1, 0, 1}}, 0.25);
  CHECK(d.Z.M == Matrix2{1, 1, 0, 1});
  CHECK(d.theta == doctest::Approx(0.75));

  // Slope relation: mu_sigma(E) = -mu_dual(D(E)) on torsion-free classes.
  test::RatGen gen(139);
  for (int it = 0; it < 200; ++it) {
    const Matrix2 M = test::random_posdet(gen);
    const CurveCharge Z{M};
    const CurveCharge Zd = dual_curve_charge(Z, 0.3).Z;
    const CurveClass x{1 + std::abs(test::random_entry(gen.rng, 5)),
                       test::random_entry(gen.rng, 20)};
    const QC z = charge_eval(Z, x);
    const QC zd = charge_eval(Zd, {x.r, -x.d});
    if (z.im != 0 && zd.im != 0) {
      // -Re/Im negates under the dual.
      CHECK(-z.re * zd.im == zd.re * z.im);
    }
  }
}

TEST_CASE("dual descriptor in the alpha regime") {
  test::RatGen gen(149);
  for (const Rat alpha : {Rat(0), Rat(1), Rat(3, 2), Rat(-2, 3)}) {
    const GluedDescriptor d = alpha_charge(alpha);
    const GluedDescriptor dd = dual_triple_descriptor(d);
    CHECK(dd.Z1.M == Matrix2::identity());
    // Second constituent is sigma_mu moved by g' = g N_{-2 alpha} = g^{-1}.
    CHECK(dd.Z2.M == Matrix2{1, alpha, 0, 1});
    if (alpha == 0) {
      CHECK(dd.Z2.M == Matrix2::identity());  // self-dual
      CHECK(dd.branch1 == 0);
      CHECK(dd.branch2 == 0);
    }
    // Anti-isometry: Z*(D e) = -conj(Z(e)) on random classes, exactly.
    for (int k = 0; k < 100; ++k) {
      const TripleClass e = test::random_class(gen.rng, 20);
      const QC z = glued_charge(d, e);
      const QC zd = glued_charge(dd, dual_class(e));
      CHECK(zd == QC{-z.re, z.im});
    }
  }
}

TEST_CASE("dual descriptor for general upper-triangular transitions") {
  test::RatGen gen(151);
  int done = 0;
  while (done < 40) {
    const Rat A = gen(), B = gen(), C = gen();
    if (!(A < 0) || !(C > 0)) continue;
    ++done;
    GluedDescriptor d;
    d.sod = Sod::s12;
    d.Z1 = CurveCharge{Matrix2{-A, B, 0, C} * Matrix2::identity()};
    d.Z2 = CurveCharge::mu();
    const GluedDescriptor dd = dual_triple_descriptor(d);
    for (int k = 0; k < 50; ++k) {
      const TripleClass e = test::random_class(gen.rng, 15);
      const QC z = glued_charge(d, e);
      const QC zd = glued_charge(dd, dual_class(e));
      CHECK(zd == QC{-z.re, z.im});
    }
  }
}

TEST_CASE("dual descriptor rejects bad shapes") {
  GluedDescriptor d;
  d.sod = Sod::s23;
  d.Z1 = d.Z2 = CurveCharge::mu();
  CHECK_THROWS_AS(dual_triple_descriptor(d), domain_error);
  GluedDescriptor e;
  e.sod = Sod::s12;
  e.Z1 = CurveCharge{Matrix2{0, -1, 1, 0}};  // transition not triangular
  e.Z2 = CurveCharge::mu();
  CHECK_THROWS_AS(dual_triple_descriptor(e), domain_error);
}

TEST_CASE("filtration triangle of embedded classes") {
  // Glued data with nonnegative first parameter: semistable.
  const StabDescriptor glued = StabDescriptor::glued(alpha_charge(1));
  const HnTriangleReport a = hn_triangle_i({0, 1}, glued);
  CHECK(a.kind == HnTriangleReport::Kind::semistable);
  REQUIRE(a.factors.size() == 1);
  CHECK(a.factors[0].cls == TripleClass{0, 1, 0, 0});

  // Tilted data keeps the skyscraper semistable as well: phi4 < 2.
  const StabDescriptor tilted =
      StabDescriptor::tilted(GammaParams{0, -1, 0, -1});
  CHECK(hn_triangle_i({0, 1}, tilted).kind ==
        HnTriangleReport::Kind::semistable);

  // The standard 23-glued heart puts the skyscraper on the wall.
  StabDescriptor h23;
  h23.data.sod = Sod::s23;
  h23.data.Z1 = CurveCharge{Matrix2{-1, 0, 0, -1}};
  h23.data.branch1 = 0;  // f(0) = 1
  h23.data.Z2 = CurveCharge::mu();
  CHECK(hn_triangle_i({0, 1}, h23).kind ==
        HnTriangleReport::Kind::jordan_holder);

  // Rotating the first factor deeper into the 23 region destabilizes it.
  StabDescriptor inside = h23;
  inside.data.Z1 = CurveCharge{
      Matrix2{-1, 0, 0, -1} * test::rotation(-0.2)};
  const HnTriangleReport f = hn_triangle_i({0, 1}, inside);
  REQUIRE(f.kind == HnTriangleReport::Kind::filtration);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].cls == TripleClass{0, 1, 0, 1});
  CHECK(f.factors[1].cls == TripleClass{0, 0, 0, -1});
  CHECK(f.factors[0].cls + f.factors[1].cls == TripleClass{0, 1, 0, 0});
  CHECK(f.factors[0].phase > f.factors[1].phase);

  // Line-bundle classes: factor sum additivity.
  const HnTriangleReport lb = hn_triangle_i({1, 0}, inside);
  if (lb.kind != HnTriangleReport::Kind::semistable) {
    CHECK(lb.factors[0].cls + lb.factors[1].cls == TripleClass{1, 0, 0, 0});
    CHECK(lb.factors[0].cls == TripleClass{1, 0, 1, 0});
  }

  CHECK_THROWS_AS(hn_triangle_i({2, 1}, glued), domain_error);
}

TEST_CASE("filtration factors sum to the embedded class") {
  test::RatGen gen(157);
  for (int it = 0; it < 60; ++it) {
    StabDescriptor d;
    d.data.sod = it % 2 ? Sod::s12 : Sod::s23;
    d.data.Z1 = CurveCharge{test::random_posdet(gen)};
    d.data.Z2 = CurveCharge{test::random_posdet(gen)};
    const CurveClass x =
        it % 3 ? CurveClass{1, test::random_entry(gen.rng, 4)}
               : CurveClass{0, 1};
    HnTriangleReport rep;
    try {
      rep = hn_triangle_i(x, d);
    } catch (const domain_error&) {
      continue;  // degenerate derived charge
    }
    TripleClass sum{};
    for (const auto& fac : rep.factors) sum = sum + fac.cls;
    if (rep.kind == HnTriangleReport::Kind::semistable)
      CHECK(sum == embed(Embedding::i, x));
    else
      CHECK(sum == embed(Embedding::i, x));
  }
}

TEST_CASE("zero factor charge is rejected") {
  StabDescriptor d;
  d.data.sod = Sod::s12;
  d.data.Z1 = CurveCharge{Matrix2{-1, 0, 0, -1}};
  d.data.Z2 = CurveCharge::mu();  // M1 + M2 = 0 kills the l-classes
  CHECK_THROWS_AS(hn_triangle_i({0, 1}, d), domain_error);
}
