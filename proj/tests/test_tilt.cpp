#include "triples/tilt.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace triples;

namespace {

// Valid tilted parameters: D1 < 0, det(M) > 0, det(M+I) > 0.
GammaParams random_gamma(test::RatGen& gen) {
  for (;;) {
    GammaParams p{gen(), gen(), gen(), gen()};
    if (p.D1 < 0 && p.det_M() > 0 && p.det_M_plus_I() > 0) return p;
  }
}

const GammaParams kRot{0, -1, 0, -1};  // M = [[0,-1],[1,0]]

}  // namespace

TEST_CASE("weak charge") {
  const GammaParams p{0, 0, 0, -1};  // C1 = 0, D1 = -1 (A1, B1 unused)
  CHECK(weak_charge(p, {1, 0, 0, 0}) == QC{-1, 1});
  CHECK(weak_charge(p, {0, 0, 0, 5}).is_zero());
  CHECK(weak_charge(p, {0, 1, 0, 0}) == QC{-1, 0});
  test::RatGen gen(61);
  for (int it = 0; it < 100; ++it) {
    GammaParams q{gen(), gen(), gen(), gen()};
    CHECK(weak_charge(q, {0, 0, 0, test::random_entry(gen.rng, 50)}).is_zero());
  }
}

TEST_CASE("tilted charge and validity") {
  CHECK(zr_charge(kRot, {1, 0, 0, 0}) == QC{-1, 0});
  CHECK(zr_charge(kRot, {0, 0, 0, 1}) == QC{-1, 0});
  CHECK(zr_charge(kRot, {0, 0, 1, 0}) == QC{0, 1});

  GammaParams bad = kRot;
  bad.D1 = 1;
  CHECK_THROWS_WITH_AS(zr_charge(bad, {1, 0, 0, 0}),
                       "InvalidGammaParams: D1 < 0 required", domain_error);
  GammaParams bad_det{0, 1, 0, -1};  // det(M) = -1
  CHECK_THROWS_AS(zr_charge(bad_det, {1, 0, 0, 0}), domain_error);
  // det(M) = 1 but det(M+I) = -3: an eigenvalue below -1 on each side.
  GammaParams bad_mi{Rat(-1), Rat(-7), Rat(-6), Rat(-1)};
  REQUIRE(bad_mi.det_M() == 1);
  REQUIRE(bad_mi.det_M_plus_I() == -3);
  CHECK_THROWS_WITH_AS(zr_charge(bad_mi, {1, 0, 0, 0}),
                       "InvalidGammaParams: det(M+I) > 0 required",
                       domain_error);
}

TEST_CASE("heart indices") {
  CHECK(heart_index_r(kRot) == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(heart_index_r(GammaParams{0, 0, 1, -1}) ==
        doctest::Approx(-0.25).epsilon(1e-14));
  CHECK(r3(kRot) == doctest::Approx(-0.25).epsilon(1e-14));
  CHECK(r3(GammaParams{0, 0, 1, -1}) ==
        doctest::Approx(std::atan2(-1.0, 2.0) / M_PI).epsilon(1e-14));
  CHECK(r3(GammaParams{0, 0, 1, -1}) == doctest::Approx(-0.1476).epsilon(1e-3));

  // Limit directions: both indices approach zero from below.
  CHECK(heart_index_r(GammaParams{0, 0, 100000, -1}) < 0);
  CHECK(heart_index_r(GammaParams{0, 0, 100000, -1}) ==
        doctest::Approx(0).epsilon(1e-4));
  CHECK(r3(GammaParams{0, 0, 100000, Rat(-1, 1000)}) < 0);
  CHECK(r3(GammaParams{0, 0, 100000, Rat(-1, 1000)}) ==
        doctest::Approx(0).epsilon(1e-4));

  test::RatGen gen(67);
  for (int it = 0; it < 200; ++it) {
    const GammaParams p = random_gamma(gen);
    const double r = heart_index_r(p);
    const double r3v = r3(p);
    CHECK(r > -1);
    CHECK(r < 0);
    CHECK(r3v > -1);
    CHECK(r3v < 0);
    CHECK(r3v > r);  // third constituent sits above the first
  }
}

TEST_CASE("lambda threshold") {
  const GammaParams p{0, 0, 0, -1};
  CHECK(lambda_gt_threshold(p, {1, 2, 1, 0}));
  CHECK(!lambda_gt_threshold(p, {1, 0, 1, 0}));
  CHECK(!lambda_gt_threshold(p, {0, 0, 1, 0}));
  CHECK_THROWS_AS(lambda_gt_threshold(p, {-1, 0, 0, 0}), domain_error);
  // Kernel classes carry no weak phase and are not above the threshold.
  CHECK(!lambda_gt_threshold(p, {0, 0, 0, 7}));
}

TEST_CASE("threshold equals negative imaginary part of the tilted charge") {
  test::RatGen gen(71);
  for (int it = 0; it < 40; ++it) {
    const GammaParams p = random_gamma(gen);
    for (long long r1 = -8; r1 <= 8; ++r1)
      for (long long d1 = -8; d1 <= 8; ++d1)
        for (long long r2 = -8; r2 <= 8; ++r2) {
          if (r1 + r2 <= 0) continue;
          const TripleClass e{r1, d1, r2, 3};
          CHECK(lambda_gt_threshold(p, e) == (sign(zr_charge(p, e).im) < 0));
        }
  }
}

TEST_CASE("seesaw at class level") {
  test::RatGen gen(73);
  int checked = 0;
  while (checked < 500) {
    const GammaParams p = random_gamma(gen);
    TripleClass a = test::random_class(gen.rng, 12);
    TripleClass b = test::random_class(gen.rng, 12);
    if (a.r1 + a.r2 <= 0 || b.r1 + b.r2 <= 0) continue;
    const TripleClass e = a + b;
    const QC za = weak_charge(p, a), zb = weak_charge(p, b),
             ze = weak_charge(p, e);
    if (za.is_zero() || zb.is_zero() || ze.is_zero()) continue;
    ++checked;
    const bool a_lt_e = phase_cmp(za, ze) < 0;
    const bool e_lt_b = phase_cmp(ze, zb) < 0;
    CHECK(a_lt_e == e_lt_b);
    const bool a_gt_e = phase_cmp(za, ze) > 0;
    const bool e_gt_b = phase_cmp(ze, zb) > 0;
    CHECK(a_gt_e == e_gt_b);
  }
}

TEST_CASE("distinguished phases for the rotation datum") {
  const DistinguishedTable t = distinguished_phases(kRot);
  CHECK(t.rows[2].phase == doctest::Approx(1.0).epsilon(1e-12));   // j C(x)
  CHECK(t.rows[3].phase == doctest::Approx(0.5).epsilon(1e-12));   // j O
  CHECK(t.rows[1].phase == doctest::Approx(1.0).epsilon(1e-12));   // i O
  CHECK(t.rows[0].phase == doctest::Approx(1.5).epsilon(1e-12));   // i C(x)
  CHECK(t.rows[4].phase == doctest::Approx(1.25).epsilon(1e-12));  // l C(x)
  CHECK(t.rows[5].phase == doctest::Approx(0.75).epsilon(1e-12));  // l O
  CHECK(t.i_structure_stable);
  CHECK(t.j_structure_stable);
  CHECK(t.l_structure_stable);
  CHECK(t.rows[0].heart_shift == -1);
  CHECK(t.rows[4].heart_shift == -1);
  CHECK(t.rows[2].heart_shift == 0);
}

TEST_CASE("distinguished phase windows") {
  test::RatGen gen(79);
  for (int it = 0; it < 150; ++it) {
    const GammaParams p = random_gamma(gen);
    const DistinguishedTable t = distinguished_phases(p);
    const double phi0 = t.rows[0].phase, phi4 = t.rows[4].phase;
    // Filtration chain of the skyscrapers: 1 < phi4 < phi0 < 2.
    CHECK(phi4 > 1.0);
    CHECK(phi0 > phi4);
    CHECK(phi0 < 2.0);
    // phi0 agrees with the principal angle of (A1, D1) lifted by two.
    const double direct =
        std::atan2(to_double(p.D1), to_double(p.A1)) / M_PI + 2.0;
    CHECK(phi0 == doctest::Approx(direct).epsilon(1e-9));
    // The shifted l-skyscraper class lands in the upper half plane.
    CHECK(sign(zr_charge(p, {0, 1, 0, 1}).im) < 0);
    CHECK(sign(zr_charge(p, -TripleClass{0, 1, 0, 1}).im) > 0);
  }
}
