#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "nbody/family5.hpp"
#include "nbody/family7.hpp"
#include "nbody/familyn.hpp"

using namespace nbody;

TEST_CASE("covered regimes produce certified witnesses") {
  SUBCASE("all pairs inside") {
    const GeneralVerdict v = nonexistence_general({0.3, 0.5, 0.7});
    CHECK(v.kind == GeneralVerdict::Kind::Nonexistence);
    CHECK(v.regime == "all pairs inside");
    CHECK(v.witness.certified);
  }
  SUBCASE("only innermost pair inside, all products with it below one") {
    const GeneralVerdict v = nonexistence_general({0.5, 1.2, 1.8});
    CHECK(v.kind == GeneralVerdict::Kind::Nonexistence);
    CHECK(v.witness.certified);
    CHECK(v.witness.equation == "innermost pair");
  }
  SUBCASE("only outermost pair outside, second-outermost product below one") {
    const GeneralVerdict v = nonexistence_general({0.5, 0.9, 1.05});
    CHECK(v.kind == GeneralVerdict::Kind::Nonexistence);
    CHECK(v.witness.certified);
    CHECK(v.witness.equation == "second outermost pair");
  }
  SUBCASE("larger families: 9 and 11 bodies") {
    CHECK(nonexistence_general({0.2, 0.3, 0.5, 0.8}).witness.certified);
    CHECK(nonexistence_general({0.2, 0.3, 0.45, 0.6, 0.8}).witness.certified);
    CHECK(nonexistence_general({0.4, 1.3, 1.6, 1.9, 2.2}).witness.certified);  // r1*rk < 1
  }
  SUBCASE("uncovered regimes make no claim") {
    CHECK(nonexistence_general({2, 3, 4}).kind == GeneralVerdict::Kind::NotCovered);
    CHECK(nonexistence_general({0.8, 3.0}).kind == GeneralVerdict::Kind::NotCovered);
  }
  SUBCASE("bad input") {
    CHECK_THROWS_AS(nonexistence_general({}), Inadmissible);
    CHECK_THROWS_AS(nonexistence_general({0.5, 0.5}), Inadmissible);
    CHECK_THROWS_AS(nonexistence_general({0.5, 2.0}), Inadmissible);  // product = 1
  }
}

TEST_CASE("agreement with the 5-body classification") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> rad(0.05, 4.5);
  int checked = 0;
  while (checked < 300) {
    double a = rad(rng), r = rad(rng);
    if (a > r) std::swap(a, r);
    FiveBodyCase c;
    try {
      c = classify5(a, r);
    } catch (const Inadmissible&) {
      continue;
    }
    GeneralVerdict v;
    try {
      v = nonexistence_general({a, r});
    } catch (const Inadmissible&) {
      continue;
    }
    const bool five_nonexistence = !case_solvable(c);
    if (v.kind == GeneralVerdict::Kind::Nonexistence) {
      CHECK(five_nonexistence);
      CHECK(v.witness.certified);
    } else {
      // the general proposition's second bullet needs a*r < 1 (its third
      // bullet coincides with the first for two pairs), so BothInside and
      // StraddleProductBelow must be covered and nothing else
      CHECK(case_solvable(c));
    }
    ++checked;
  }
}

TEST_CASE("agreement with the 7-body classification") {
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> rad(0.05, 4.5);
  int checked = 0;
  while (checked < 300) {
    double v[3] = {rad(rng), rad(rng), rad(rng)};
    std::sort(v, v + 3);
    SevenBodyCase c;
    GeneralVerdict g;
    try {
      c = classify7(v[0], v[1], v[2]);
      g = nonexistence_general({v[0], v[1], v[2]});
    } catch (const Inadmissible&) {
      continue;
    }
    if (g.kind == GeneralVerdict::Kind::Nonexistence) {
      CHECK(case_nonexistence(c));
      CHECK(g.witness.certified);
      // the per-family witness agrees
      CHECK(nonexistence_witness7(v[0], v[1], v[2]).certified);
    } else {
      CHECK_FALSE(case_nonexistence(c));
    }
    ++checked;
  }
}
