#pragma once

#include <vector>

#include "lal/classify.hpp"
#include "lal/lie.hpp"

namespace lal {

// Sector data for a twisted module: order n of the automorphism, ⟨α,α⟩ = 2K/n,
// twist power m, and the α(0)-eigenvalue index s (eigenvalue s/n).
struct TwistParams {
  long n = 1;
  Rat k;  // K; integer exactly when the m = 1 sector carries integer weights
  long m = 0;
  long s = 0;
};

// Weight shift of L(0) on the m-th twisted sector: −m(s − mK)/n.
Rat grading_shift(const TwistParams& p);

// Shift of the α zero mode on the m-th twisted sector: −2mK/n.
Rat zero_mode_shift(const TwistParams& p);

struct TwistedComponent {
  SimpleLieType type;
  long level;
  std::vector<long> labels;  // dominant weight in Dynkin labels
};

struct TwistedWeightInput {
  std::vector<TwistedComponent> components;
};

// w = Σ_j [ (λ|2ρ+λ)/2(k+h∨) + (1/h∨)·min_{μ∈Π(λ)}(−ρ|μ) + k(ρ|ρ)/2(h∨)² ],
// verified against the completed-square closed form
// Σ_j [ (h∨λ−kρ | h∨λ−kρ) + k·h∨·(ρ|ρ) ] / (2(h∨)²(k+h∨)).
Rat twisted_conformal_weight(const TwistedWeightInput& in);

struct TwistedMinimum {
  Rat min;
  std::vector<std::vector<std::vector<long>>> argmin;  // label tuples
};

// Exhaustive minimization over products of integrable weights.
// Capped at rank ≤ 8 and level ≤ 4 per component.
TwistedMinimum minimize_twisted_weight(const std::vector<LevelledAlgebra>& comps);

// Infimum Σ k(ρ|ρ)/(2h∨(k+h∨)) of the twisted weight, attained at λ = kρ/h∨;
// equals 1 for every admissible candidate.  Throws on inadmissible input.
Rat twisted_weight_lower_bound(const Candidate& c);

// (−n + kK)² − (n + (k−2)K)², which factors as 4(k−1)K(K−n).
Rat twist_norm_gap(long k, const Rat& kk, const Rat& n);

}  // namespace lal
