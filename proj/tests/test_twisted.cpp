#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lal/twisted.hpp"

using namespace lal;

TEST_CASE("grading shift") {
  CHECK(grading_shift({6, Rat(9), 0, 5}) == 0);
  CHECK(grading_shift({6, Rat(9), 1, 9}) == 0);  // s = K
  CHECK(grading_shift({6, Rat(9), 1, 3}) == 1);
  // strictly decreasing in s for m = 1
  for (long s = -5; s < 5; ++s)
    CHECK(grading_shift({7, frac(3, 2), 1, s}) >
          grading_shift({7, frac(3, 2), 1, s + 1}));
  CHECK(zero_mode_shift({6, Rat(9), 1, 0}) == -3);
  CHECK(zero_mode_shift({4, frac(3, 2), 2, 0}) == frac(-3, 2));
  CHECK_THROWS(grading_shift({0, Rat(1), 1, 0}));
}

TEST_CASE("twisted conformal weight examples") {
  CHECK(twisted_conformal_weight({{{SimpleLieType::parse("A1"), 2, {1}}}}) ==
        frac(1, 16));
  CHECK(twisted_conformal_weight({{{SimpleLieType::parse("A1"), 2, {0}}}}) ==
        frac(1, 8));
  // λ = kρ/h∨ integral: value k·(ρ|ρ)/(2h∨(k+h∨))
  CHECK(twisted_conformal_weight({{{SimpleLieType::parse("A2"), 3, {1, 1}}}}) ==
        frac(1, 6));
  // additivity over components
  CHECK(twisted_conformal_weight({{{SimpleLieType::parse("A1"), 2, {1}},
                                   {SimpleLieType::parse("A1"), 2, {0}}}}) ==
        frac(3, 16));
  CHECK_THROWS(
      twisted_conformal_weight({{{SimpleLieType::parse("A1"), 1, {2}}}}));
  CHECK_THROWS(
      twisted_conformal_weight({{{SimpleLieType::parse("A1"), 1, {-1}}}}));
}

TEST_CASE("identity grid: direct equals closed form") {
  // twisted_conformal_weight throws internally if the two routes disagree or
  // the Π(λ) minimum differs from −(ρ|λ); sweep a grid to exercise both
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2",
                           "F4", "A4", "B4", "C4", "D5", "E6"}) {
    auto t = SimpleLieType::parse(name);
    for (long k = 1; k <= 3; ++k)
      for (const auto& labels : integrable_weights({t, k})) {
        Rat w = twisted_conformal_weight({{{t, k, labels}}});
        CHECK(w >= 0);
      }
  }
}

TEST_CASE("root pairings with rho/h are strictly inside (-1, 1)") {
  for (const char* name : {"A1", "A5", "B3", "C4", "D5", "E6", "E7", "E8",
                           "F4", "G2"}) {
    const auto& rs = root_system(SimpleLieType::parse(name));
    Rat hv = algebra_info(rs.type).dual_coxeter;
    for (const auto& beta : rs.roots) {
      Rat p = rs.ip(rs.weyl_vector, beta) / hv;
      CHECK(p > -1);
      CHECK(p < 1);
    }
  }
}

TEST_CASE("minimization over integrable weights") {
  auto a1 = minimize_twisted_weight({{SimpleLieType::parse("A1"), 2}});
  CHECK(a1.min == frac(1, 16));
  REQUIRE(a1.argmin.size() == 1);
  CHECK(a1.argmin[0] == std::vector<std::vector<long>>{{1}});

  // kρ/h∨ = ρ integral at level 3: unique argmin (1,1)
  auto a2 = minimize_twisted_weight({{SimpleLieType::parse("A2"), 3}});
  CHECK(a2.min == frac(1, 6));
  REQUIRE(a2.argmin.size() == 1);
  CHECK(a2.argmin[0] == std::vector<std::vector<long>>{{1, 1}});

  // kρ/h∨ = ρ/2 not integral; both integrable weights tie at 1/16
  auto a11 = minimize_twisted_weight({{SimpleLieType::parse("A1"), 1}});
  CHECK(a11.min == frac(1, 16));
  CHECK(a11.argmin.size() == 2);

  CHECK_THROWS(minimize_twisted_weight({{SimpleLieType::parse("A9"), 1}}));
  CHECK_THROWS(minimize_twisted_weight({{SimpleLieType::parse("A1"), 5}}));
}

TEST_CASE("lower bound is exactly 1 on admissible candidates") {
  for (const auto& c : surviving_cases())
    CHECK(twisted_weight_lower_bound(c) == 1);
  Candidate d4({{SimpleLieType::parse("D4"), 36}});
  CHECK(twisted_weight_lower_bound(d4) == 1);
  Candidate f4({{SimpleLieType::parse("F4"), 6}});
  CHECK_THROWS(twisted_weight_lower_bound(f4));
}

TEST_CASE("norm-gap polynomial identity") {
  for (long k = -3; k <= 5; ++k)
    for (long kk = -4; kk <= 4; ++kk)
      for (long n = -3; n <= 3; ++n)
        CHECK(twist_norm_gap(k, Rat(kk), Rat(n)) ==
              Rat(4 * (k - 1) * kk) * (Rat(kk) - Rat(n)));
}
