#pragma once

#include <string>
#include <vector>

#include "lal/lie.hpp"

namespace lal {

// A candidate semisimple weight-one algebra: a multiset of levelled simple
// components, canonically sorted.
struct Candidate {
  std::vector<LevelledAlgebra> components;

  explicit Candidate(std::vector<LevelledAlgebra> comps);
  long total_rank() const;
  Int dimension() const;
  std::string str() const;  // e.g. "D9,2+A7,1"
};

// Invariants of the Weyl-vector element α = Σ ρ_j/h∨_j and the associated
// constraint checks.
struct WReport {
  Int dim_v1;
  Rat ratio;       // common h∨_j/k_j when constraint (i) holds, else 0
  Rat alpha_norm;  // ⟨α,α⟩ = 2·dim V₁/(dim V₁ − 24) = 2K₀/N₀
  Int k0, n0;      // coprime, ⟨α,α⟩ = 2K₀/N₀
  bool admissible;
  std::vector<std::string> violations;
};

// Throws on dim V₁ = 24 (the Leech boundary; the dimension formula degenerates).
WReport w_report(const Candidate& c);

struct EnumOptions {
  bool composite_n0 = false;  // keep only candidates with composite N₀
  bool composite_k0 = false;
};

// Candidates of the given total rank with dim > 24, sorted by name.  Levels
// are derived, not enumerated: k_j = 24·h∨_j/(dim V₁ − 24) when integral,
// otherwise the smallest level allowed by (K₀ − N₀) | k_j.  Setting either
// composite filter additionally demands full admissibility.
std::vector<Candidate> enumerate_candidates(long rank, const EnumOptions& opt = {});

// Simple types with N₀ | h∨ and rank bounded; the component pool for a fixed
// even N₀ branch.
std::vector<SimpleLieType> component_pool(const Int& n0, long max_rank);

// Exhaustive treatment of kn(h+1) = 24(k+h) over simply laced Coxeter numbers.
struct NoOneEvidence {
  struct Branch {
    long k, h, n;
    std::string verdict;  // "niemeier" for k=1, otherwise the exclusion reason
  };
  std::vector<Branch> solutions;       // every (k,h,n) solving the equation
  bool only_k1_survives;               // no k ≥ 2 branch survives
};

NoOneEvidence prop_noone_search();

// Exact evaluation of the final-case inequalities for the four surviving
// rank-16 candidates.
struct InequalityLine {
  std::string description;
  Rat lhs, rhs;
  std::string relation;  // how lhs and rhs stand to each other
  bool contradiction;
};

const std::vector<Candidate>& surviving_cases();  // the four candidates
std::vector<InequalityLine> case_inequality_report(const Candidate& c);

}  // namespace lal
