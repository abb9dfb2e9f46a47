#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lal/classify.hpp"

using namespace lal;

namespace {

Candidate make(std::initializer_list<std::pair<const char*, long>> comps) {
  std::vector<LevelledAlgebra> v;
  for (const auto& [t, k] : comps)
    v.emplace_back(SimpleLieType::parse(t), k);
  return Candidate(std::move(v));
}

}  // namespace

TEST_CASE("rank-4 reports") {
  auto d4 = w_report(make({{"D4", 36}}));
  CHECK(d4.alpha_norm == 14);
  CHECK(d4.admissible);
  CHECK(d4.k0 == 7);
  CHECK(d4.n0 == 1);

  // F4 never carries a consistent integral level: 7 ∤ h∨ = 9
  auto f4 = w_report(make({{"F4", 6}}));
  CHECK(f4.alpha_norm == Rat(26) / 7);
  CHECK(f4.n0 == 7);
  CHECK(f4.k0 == 13);
  CHECK_FALSE(f4.admissible);

  auto b4 = w_report(make({{"B4", 14}}));
  CHECK(b4.alpha_norm == 6);
  CHECK(b4.admissible);
  auto c4 = w_report(make({{"C4", 10}}));
  CHECK(c4.alpha_norm == 6);
  CHECK(c4.admissible);
  auto g2g2 = w_report(make({{"G2", 24}, {"G2", 24}}));
  CHECK(g2g2.alpha_norm == 14);
  CHECK(g2g2.admissible);
}

TEST_CASE("surviving rank-16 case reports") {
  auto da = w_report(make({{"D9", 2}, {"A7", 1}}));
  CHECK(da.dim_v1 == 216);
  CHECK(da.alpha_norm == Rat(9) / 4);  // 18/8
  CHECK(da.k0 == 9);
  CHECK(da.n0 == 8);
  CHECK(da.admissible);

  auto eb = w_report(make({{"E8", 2}, {"B8", 1}}));
  CHECK(eb.dim_v1 == 384);
  CHECK(eb.alpha_norm == Rat(32) / 15);
  CHECK(eb.k0 == 16);
  CHECK(eb.n0 == 15);
  CHECK(eb.admissible);

  auto cf = w_report(make({{"C8", 1}, {"F4", 1}, {"F4", 1}}));
  CHECK(cf.dim_v1 == 240);
  CHECK(cf.alpha_norm == Rat(20) / 9);
  CHECK(cf.admissible);

  auto ebf = w_report(make({{"E7", 2}, {"B5", 1}, {"F4", 1}}));
  CHECK(ebf.dim_v1 == 240);
  CHECK(ebf.alpha_norm == Rat(20) / 9);
  CHECK(ebf.admissible);
}

TEST_CASE("leech boundary and inadmissible inputs") {
  CHECK_THROWS(w_report(make({{"A1", 1}, {"A1", 1}, {"A1", 1}, {"A1", 1},
                              {"A1", 1}, {"A1", 1}, {"A1", 1}, {"A1", 1}})));
  // the D12 branch with level forced to 3: ratio constraint fails,
  // and K0 - N0 = 2 contradicts the forced level 3
  auto d12 = w_report(make({{"D12", 3}}));
  CHECK(d12.dim_v1 == 276);
  CHECK(d12.alpha_norm == Rat(46) / 21);
  CHECK(d12.k0 == 23);
  CHECK(d12.n0 == 21);
  CHECK_FALSE(d12.admissible);

  // candidates below dimension 24 are rejected outright
  CHECK_THROWS(make({{"A2", 5}}));
}

TEST_CASE("candidate naming is canonical") {
  CHECK(make({{"A7", 1}, {"D9", 2}}).str() == "D9,2+A7,1");
  CHECK(make({{"F4", 1}, {"C8", 1}, {"F4", 1}}).str() == "C8,1+F4,1^2");
  CHECK_THROWS(Candidate({}));
}

TEST_CASE("rank-4 enumeration matches the five known algebras") {
  auto cands = enumerate_candidates(4);
  std::vector<std::string> names;
  for (const auto& c : cands) names.push_back(c.str());
  REQUIRE(names.size() == 5);
  CHECK(names[0] == "B4,14");
  CHECK(names[1] == "C4,10");
  CHECK(names[2] == "D4,36");
  CHECK(names[3] == "F4,6");
  CHECK(names[4] == "G2,24^2");

  EnumOptions both;
  both.composite_n0 = both.composite_k0 = true;
  CHECK(enumerate_candidates(4, both).empty());
  CHECK_THROWS(enumerate_candidates(3));
  CHECK_THROWS(enumerate_candidates(25));
}

TEST_CASE("composite sweep leaves exactly the four rank-16 cases") {
  EnumOptions both;
  both.composite_n0 = both.composite_k0 = true;
  std::vector<std::string> found;
  for (long rank : {4L, 6L, 8L, 10L, 12L, 16L})
    for (const auto& c : enumerate_candidates(rank, both))
      found.push_back(c.str());
  std::sort(found.begin(), found.end());
  REQUIRE(found.size() == 4);
  CHECK(found[0] == "C8,1+F4,1^2");
  CHECK(found[1] == "D9,2+A7,1");
  CHECK(found[2] == "E7,2+B5,1+F4,1");
  CHECK(found[3] == "E8,2+B8,1");
}

TEST_CASE("filters only remove candidates") {
  EnumOptions none, n0only, both;
  n0only.composite_n0 = true;
  both.composite_n0 = both.composite_k0 = true;
  for (long rank : {4L, 8L, 12L}) {
    auto all = enumerate_candidates(rank, none);
    auto filtered = enumerate_candidates(rank, n0only);
    auto tight = enumerate_candidates(rank, both);
    CHECK(filtered.size() <= all.size());
    CHECK(tight.size() <= filtered.size());
    std::vector<std::string> all_names;
    for (const auto& c : all) all_names.push_back(c.str());
    for (const auto& c : filtered) {
      // subset of the unfiltered scan
      CHECK(std::find(all_names.begin(), all_names.end(), c.str()) !=
            all_names.end());
    }
    for (const auto& c : all) {
      auto r = w_report(c);
      CHECK(r.dim_v1 > 24);
      CHECK(r.k0 > r.n0);
      CHECK(gcd(r.k0, r.n0) == 1);
      CHECK(r.alpha_norm == 2 * frac(r.k0, r.n0));
      if (r.admissible) {
        Int d = r.k0 - r.n0;
        CHECK(24 % d == 0);
        Rat ksum = 0;
        for (const auto& comp : c.components) {
          CHECK(algebra_info(comp.type).dual_coxeter % r.n0 == 0);
          CHECK(comp.level % d == 0);
          ksum += frac(comp.level * algebra_info(comp.type).dim,
                       12 * algebra_info(comp.type).dual_coxeter);
        }
        // both derivation routes for ⟨α,α⟩ agree
        CHECK(ksum == r.alpha_norm);
      }
    }
  }
}

TEST_CASE("component pool for the even branches") {
  auto pool = component_pool(8, 16);
  std::vector<std::string> names;
  for (auto t : pool) names.push_back(t.name());
  REQUIRE(names.size() == 7);
  CHECK(names == std::vector<std::string>{"A7", "A15", "C7", "C15", "D5", "D9",
                                          "D13"});
}

TEST_CASE("kn(h+1) = 24(k+h) has no surviving branch with k >= 2") {
  auto ev = prop_noone_search();
  CHECK(ev.only_k1_survives);
  bool saw_k1 = false, saw_even = false, saw_k3 = false;
  for (const auto& b : ev.solutions) {
    if (b.k == 1) {
      CHECK(b.n == 24);
      CHECK(b.verdict == "niemeier");
      saw_k1 = true;
    } else {
      CHECK(b.verdict != "unexcluded");
      if (b.k % 2 == 0 && b.verdict == "mod-8 obstruction") saw_even = true;
      if (b.k == 3 && b.h == 7) {
        // A6 components force the rank to be a multiple of 6, not 10
        CHECK(b.n == 10);
        CHECK(b.verdict ==
              "rank not a sum of simply laced ranks with this Coxeter number");
        saw_k3 = true;
      }
    }
  }
  CHECK(saw_k1);
  CHECK(saw_even);
  CHECK(saw_k3);
}

TEST_CASE("final-case inequality reports show the contradictions") {
  REQUIRE(surviving_cases().size() == 4);
  for (const auto& c : surviving_cases()) {
    auto rep = case_inequality_report(c);
    CHECK(!rep.empty());
    bool contradicted = false;
    for (const auto& line : rep) contradicted = contradicted || line.contradiction;
    CHECK(contradicted);
  }
  // spot values
  auto n9 = case_inequality_report(surviving_cases()[1]);
  CHECK(n9[0].lhs == Rat(20) / 9);
  CHECK(n9[0].rhs == Rat(48) / 9);
  auto n15 = case_inequality_report(surviving_cases()[3]);
  CHECK(n15.back().rhs == Rat(216) / 75);
  CHECK(n15.back().lhs == Rat(32) / 15);
  CHECK_THROWS(case_inequality_report(make({{"D4", 36}})));
}
