#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "nbody/family7.hpp"

using namespace nbody;

namespace {

double sq(double v) { return v * v; }
double pow4(double v) { return sq(sq(v)); }

// mirror-pair interaction kernel: direct + antipodal channel
double pairk(double p, double q) {
  return 0.5 * sq(q * q + 1) * (1 / (sq(p * q + 1) * sq(p - q)) + 1 / (sq(q + p) * sq(p * q - 1)));
}
// self-pair kernel (a body with its own mirror image)
double selfk(double p) { return 0.125 * sq(p * p + 1) / (sq(p * p - 1) * p * p); }
// signed cross-circle kernel (one of the pair inside, reduced combination)
double crossk(double p, double q) {
  return 2 * p * q * sq(q * q + 1) * (q * q - 1) * (1 - p * p) /
         (sq(p * p * q * q - 1) * sq(p * p - q * q));
}

}  // namespace

TEST_CASE("classification of the (x, y, z) space") {
  CHECK(classify7(0.3, 0.5, 0.7) == SevenBodyCase::AllInside);
  CHECK(classify7(2, 3, 4) == SevenBodyCase::AllOutside);
  CHECK(classify7(0.5, 1.2, 1.8) == SevenBodyCase::InnerPairInsideProductBelow);  // z < 1/x
  CHECK(classify7(0.5, 1.5, 2.5) == SevenBodyCase::InnerPairInsideMid);
  CHECK(classify7(0.5, 2.5, 4.0) == SevenBodyCase::InnerPairInsideProductAbove);  // xy > 1
  CHECK(classify7(0.5, 0.9, 1.05) == SevenBodyCase::TwoPairsInsideBelow);         // yz < 1
  CHECK(classify7(0.5, 0.8, 1.5) == SevenBodyCase::TwoPairsInsideMid);            // xz < 1 < yz
  CHECK(classify7(0.4, 0.8, 3.0) == SevenBodyCase::TwoPairsInsideAbove);          // xz > 1
  CHECK_THROWS_AS(classify7(0.5, 0.5, 2.0), Inadmissible);
  CHECK_THROWS_AS(classify7(0.5, 2.0, 3.0), Inadmissible);  // xy = 1
  CHECK_THROWS_AS(classify7(0.5, 1.0 + 1e-9, 3.0), Inadmissible);  // on the circle
  CHECK(case_nonexistence(SevenBodyCase::AllInside));
  CHECK(case_nonexistence(SevenBodyCase::InnerPairInsideProductBelow));
  CHECK(case_nonexistence(SevenBodyCase::TwoPairsInsideBelow));
  CHECK_FALSE(case_nonexistence(SevenBodyCase::AllOutside));
}

TEST_CASE("coefficient system matches the printed all-outside formulas") {
  for (auto [x, y, z] : {std::array<double, 3>{2, 3, 4}, {1.5, 2.5, 5.0}}) {
    const CoefficientSystem s = coefficient_system(x, y, z);
    CHECK(s.A[0] == doctest::Approx((x * x - 1) * x / pow4(1 + x * x) - selfk(x)).epsilon(1e-12));
    CHECK(s.A[1] == doctest::Approx((y * y - 1) * y / pow4(1 + y * y) +
                                    0.5 * sq(x * x + 1) / (sq(x * y + 1) * sq(x - y)) -
                                    0.5 * sq(x * x + 1) / (sq(y + x) * sq(x * y - 1)))
                        .epsilon(1e-12));
    CHECK(s.A[2] == doctest::Approx((z * z - 1) * z / pow4(1 + z * z) +
                                    0.5 * sq(x * x + 1) / (sq(x * z + 1) * sq(x - z)) -
                                    0.5 * sq(x * x + 1) / (sq(z + x) * sq(x * z - 1)))
                        .epsilon(1e-12));
    CHECK(s.a[0] == doctest::Approx(-0.5 / (x * x)).epsilon(1e-13));
    CHECK(s.a[1] == doctest::Approx(-0.5 / (y * y)).epsilon(1e-12));
    CHECK(s.a[2] == doctest::Approx(-0.5 / (z * z)).epsilon(1e-12));
    CHECK(s.b[0] == doctest::Approx(pairk(x, y)).epsilon(1e-12));
    CHECK(s.b[1] == doctest::Approx(selfk(y)).epsilon(1e-12));
    CHECK(s.b[2] == doctest::Approx(-0.5 * sq(y * y + 1) / (sq(y * z + 1) * sq(y - z)) +
                                    0.5 * sq(y * y + 1) / (sq(z + y) * sq(y * z - 1)))
                        .epsilon(1e-12));
    CHECK(s.c[0] == doctest::Approx(pairk(x, z)).epsilon(1e-12));
    CHECK(s.c[1] == doctest::Approx(pairk(y, z)).epsilon(1e-12));
    CHECK(s.c[2] == doctest::Approx(selfk(z)).epsilon(1e-12));
  }
}

TEST_CASE("coefficient system matches the printed inner-pair-inside formulas") {
  SUBCASE("y < 1/x < z") {
    const double x = 0.5, y = 1.5, z = 2.5;
    const CoefficientSystem s = coefficient_system(x, y, z);
    REQUIRE(s.case_id == SevenBodyCase::InnerPairInsideMid);
    CHECK(s.A[0] ==
          doctest::Approx(-(1 - x * x) * x / pow4(1 + x * x) +
                          0.125 * sq(x * x + 1) / (sq(x * x - 1) * x * x)).epsilon(1e-12));
    CHECK(s.A[1] == doctest::Approx((y * y - 1) * y / pow4(1 + y * y) +
                                    0.5 * sq(x * x + 1) / (sq(y + x) * sq(x * y - 1)) +
                                    0.5 * sq(x * x + 1) / (sq(x * y + 1) * sq(x - y)))
                        .epsilon(1e-12));
    CHECK(s.A[2] ==
          doctest::Approx((z * z - 1) * z / pow4(1 + z * z) - crossk(z, x)).epsilon(1e-12));
    CHECK(s.b[0] == doctest::Approx(-crossk(x, y)).epsilon(1e-12));
    CHECK(s.b[1] == doctest::Approx(selfk(y)).epsilon(1e-12));
    CHECK(s.b[2] == doctest::Approx(crossk(z, y)).epsilon(1e-12));
    CHECK(s.c[0] == doctest::Approx(pairk(x, z)).epsilon(1e-12));
    CHECK(s.c[1] == doctest::Approx(pairk(y, z)).epsilon(1e-12));
    CHECK(s.c[2] == doctest::Approx(selfk(z)).epsilon(1e-12));
    CHECK(s.sign_violations.empty());
  }
  SUBCASE("1/x < y < z") {
    const double x = 0.5, y = 2.5, z = 4.0;
    const CoefficientSystem s = coefficient_system(x, y, z);
    REQUIRE(s.case_id == SevenBodyCase::InnerPairInsideProductAbove);
    CHECK(s.A[1] ==
          doctest::Approx((y * y - 1) * y / pow4(1 + y * y) - crossk(y, x)).epsilon(1e-12));
    CHECK(s.b[0] == doctest::Approx(pairk(x, y)).epsilon(1e-12));
    CHECK(s.sign_violations.empty());
  }
}

TEST_CASE("printed sign pattern fails for b3 near the all-outside existence regime") {
  const CoefficientSystem s = coefficient_system(2, 3, 4);
  REQUIRE(s.sign_violations.size() == 1);
  CHECK(s.sign_violations[0].find("b3") == 0);
}

TEST_CASE("exact 3x3 solve back-substitutes") {
  const MassSolution7 sol = solve_masses_exact7(2, 2.05, 4);
  CHECK(sol.residual_max < 1e-10);
  CHECK_FALSE(sol.positive);  // M < 0 here
  CHECK(sol.M < 0);
  CHECK_THROWS_AS(solve_masses_exact7(0.3, 0.5, 0.7), WrongCase);
}

TEST_CASE("all-outside scan is empty; inner-pair-inside search certifies hits") {
  const auto empty = scan7(SevenBodyCase::AllOutside, 'y', 2, 4, 3.5, 4.0, 200);
  CHECK(empty.empty());
  const auto hits = paper_existence_search(0.5, 2.5, SevenBodyCase::InnerPairInsideMid, 200);
  REQUIRE_FALSE(hits.empty());
  for (const auto& h : hits) {
    CHECK(h.solution.positive);
    CHECK(h.solution.residual_max < 1e-10);
    // every hit must also satisfy the full complex condition system; masses
    // blow up toward the regime pole, so the tolerance is mass-relative
    const Configuration c = symmetric_collinear({h.x, h.y, h.z},
                                                {1.0, h.solution.M, h.solution.m},
                                                h.solution.mu, true);
    const double scale = std::max({1.0, h.solution.mu, h.solution.M, h.solution.m});
    CHECK(condition_residual(c).max_abs < 1e-10 * scale);
  }
}

TEST_CASE("nonexistence witnesses for the three covered regimes") {
  for (auto [x, y, z] :
       {std::array<double, 3>{0.3, 0.5, 0.7}, {0.5, 1.2, 1.8}, {0.5, 0.9, 1.05}}) {
    const NonexistenceWitness w = nonexistence_witness7(x, y, z);
    CHECK(w.certified);
    CHECK(w.lhs > 0);
    for (double c : w.mass_coeffs) CHECK(c > 0);
  }
  CHECK_THROWS_AS(nonexistence_witness7(2, 3, 4), WrongCase);
  // two-pairs-mid admits no sign-definite certificate
  CHECK_THROWS_AS(nonexistence_witness7(0.5, 0.8, 1.5), WrongCase);
}

TEST_CASE("6-body corollary") {
  const Corollary6Verdict non = corollary_6body(0.3, 0.5, 0.7);
  CHECK(non.kind == Corollary6Verdict::Kind::Nonexistence);
  REQUIRE(non.witness.has_value());
  CHECK(non.witness->certified);

  // with mu = 0 the reduced system is overdetermined (3 equations, 2
  // unknowns); the scan runs and reports its hits honestly (empirically
  // there are none; this is a recorded finding, not an error)
  const Corollary6Verdict search = corollary_6body(0.5, 1.6, 2.5);
  CHECK(search.kind == Corollary6Verdict::Kind::ExistenceSearch);
  CHECK(search.scanned > 0);
  for (const auto& p : search.certified) {
    CHECK(p.positive);
    CHECK(p.residual_max < 1e-10);
  }
  CHECK(corollary_6body(2, 3, 4).kind == Corollary6Verdict::Kind::NotCovered);
}

TEST_CASE("first all-outside constant is negative for x > 1") {
  for (double x = 1.01; x < 50; x *= 1.3) CHECK(lemma4_a1(x) < 0);
  const CoefficientSystem s = coefficient_system(2, 3, 4);
  CHECK(s.A[0] == doctest::Approx(lemma4_a1(2)).epsilon(1e-12));
}
