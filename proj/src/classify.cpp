#include "lal/classify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace lal {

namespace {

bool before(const LevelledAlgebra& a, const LevelledAlgebra& b) {
  if (a.type.rank != b.type.rank) return a.type.rank > b.type.rank;
  Int da = algebra_info(a.type).dim, db = algebra_info(b.type).dim;
  if (da != db) return da > db;
  if (a.type.family != b.type.family) return a.type.family < b.type.family;
  return a.level > b.level;
}

bool is_composite(const Int& n) { return n > 1 && !is_prime(to_long(n)); }

}  // namespace

Candidate::Candidate(std::vector<LevelledAlgebra> comps)
    : components(std::move(comps)) {
  if (components.empty()) throw std::domain_error("empty candidate");
  std::sort(components.begin(), components.end(), before);
  if (total_rank() > 24)
    throw std::domain_error("total rank exceeds 24: " + str());
  if (dimension() < 24)
    throw std::domain_error("dimension below 24: " + str());
}

long Candidate::total_rank() const {
  long r = 0;
  for (const auto& c : components) r += c.type.rank;
  return r;
}

Int Candidate::dimension() const {
  Int d = 0;
  for (const auto& c : components) d += algebra_info(c.type).dim;
  return d;
}

std::string Candidate::str() const {
  std::string s;
  for (std::size_t i = 0; i < components.size();) {
    std::size_t j = i;
    while (j < components.size() && components[j] == components[i]) ++j;
    if (!s.empty()) s += "+";
    s += components[i].type.name() + "," + std::to_string(components[i].level);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

WReport w_report(const Candidate& c) {
  WReport r;
  r.dim_v1 = c.dimension();
  if (r.dim_v1 == 24)
    throw std::domain_error("Leech boundary: dim V1 = 24");

  // ⟨α,α⟩ = 2 dim/(dim − 24); on admissible candidates this agrees with the
  // component sum Σ k_j·dim_j/(12 h∨_j), which constraint (i) enforces
  r.alpha_norm = 2 * frac(r.dim_v1, r.dim_v1 - 24);
  Rat half = r.alpha_norm / 2;
  r.k0 = half.get_num();
  r.n0 = half.get_den();

  Rat ksum = 0;
  for (const auto& comp : c.components) {
    auto info = algebra_info(comp.type);
    ksum += frac(comp.level * info.dim, 12 * info.dual_coxeter);
  }

  // (i) h∨_j/k_j constant and equal to (dim V₁ − 24)/24
  Rat target = frac(r.dim_v1 - 24, 24);
  bool constant = true;
  Rat ratio = 0;
  for (std::size_t j = 0; j < c.components.size(); ++j) {
    Rat q = frac(algebra_info(c.components[j].type).dual_coxeter,
                 c.components[j].level);
    if (j == 0) ratio = q;
    if (q != ratio) constant = false;
  }
  if (!constant || ratio != target) {
    r.violations.push_back(
        "dual Coxeter/level ratio is not constant equal to (dim V1 - 24)/24");
  } else if (ksum != r.alpha_norm) {
    r.violations.push_back("component sum for ⟨α,α⟩ disagrees");
  }
  r.ratio = constant ? ratio : Rat(0);

  Int d = r.k0 - r.n0;
  if (d <= 0) r.violations.push_back("K0 <= N0");
  if (d <= 0 || 24 % d != 0)
    r.violations.push_back("(K0 - N0) does not divide 24");
  for (const auto& comp : c.components) {
    auto info = algebra_info(comp.type);
    if (info.dual_coxeter % r.n0 != 0) {
      r.violations.push_back("N0 does not divide the dual Coxeter number of " +
                             comp.type.name());
      break;
    }
  }
  if (d > 0)
    for (const auto& comp : c.components)
      if (comp.level % d != 0) {
        r.violations.push_back("(K0 - N0) does not divide the level of " +
                               comp.type.name());
        break;
      }
  r.admissible = r.violations.empty();
  return r;
}

namespace {

// simple types of exactly this rank, skipping the repeated isomorphism
// classes C2 ≅ B2 and D3 ≅ A3
std::vector<SimpleLieType> types_of_rank(long r) {
  std::vector<SimpleLieType> out;
  out.emplace_back(Family::A, r);
  if (r >= 2) out.emplace_back(Family::B, r);
  if (r >= 3) out.emplace_back(Family::C, r);
  if (r >= 4) out.emplace_back(Family::D, r);
  if (r == 6 || r == 7 || r == 8) out.emplace_back(Family::E, r);
  if (r == 4) out.emplace_back(Family::F, r);
  if (r == 2) out.emplace_back(Family::G, r);
  return out;
}

void multisets(long remaining, std::size_t min_index,
               const std::vector<SimpleLieType>& pool,
               std::vector<SimpleLieType>& cur,
               const std::function<void(const std::vector<SimpleLieType>&)>& f) {
  if (remaining == 0) {
    f(cur);
    return;
  }
  for (std::size_t i = min_index; i < pool.size(); ++i) {
    if (pool[i].rank > remaining) continue;
    cur.push_back(pool[i]);
    multisets(remaining - pool[i].rank, i, pool, cur, f);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Candidate> enumerate_candidates(long rank, const EnumOptions& opt) {
  if (rank < 4 || rank > 24)
    throw std::domain_error("rank must be between 4 and 24");
  std::vector<SimpleLieType> pool;
  for (long r = rank; r >= 1; --r)
    for (auto t : types_of_rank(r)) pool.push_back(t);

  // Any composite filter means running the full constraint machinery, not
  // just the dimension scan.
  bool require_admissible = opt.composite_n0 || opt.composite_k0;

  std::vector<Candidate> out;
  std::vector<SimpleLieType> cur;
  multisets(rank, 0, pool, cur, [&](const std::vector<SimpleLieType>& types) {
    Int dim = 0;
    for (auto t : types) dim += algebra_info(t).dim;
    if (dim <= 24) return;
    Int denom = dim - 24;
    Int g = gcd(Int(24), denom);
    Int d = 24 / g;  // K₀ − N₀ for this dimension
    // constraint (i) pins every level: k_j = 24 h∨_j / (dim V₁ − 24); when
    // that fails to be integral, fall back to the smallest level allowed by
    // the divisibility constraint (K₀ − N₀) | k_j
    std::vector<LevelledAlgebra> comps;
    for (auto t : types) {
      Int num = 24 * algebra_info(t).dual_coxeter;
      comps.emplace_back(t, to_long(num % denom == 0 ? num / denom : d));
    }
    Candidate c(std::move(comps));
    WReport r = w_report(c);
    if (require_admissible && !r.admissible) return;
    if (opt.composite_n0 && !is_composite(r.n0)) return;
    if (opt.composite_k0 && !is_composite(r.k0)) return;
    out.push_back(std::move(c));
  });
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    return a.str() < b.str();
  });
  return out;
}

std::vector<SimpleLieType> component_pool(const Int& n0, long max_rank) {
  std::vector<SimpleLieType> out;
  for (long r = 1; r <= max_rank; ++r)
    for (auto t : types_of_rank(r))
      if (algebra_info(t).dual_coxeter % n0 == 0) out.push_back(t);
  std::sort(out.begin(), out.end(), [](SimpleLieType a, SimpleLieType b) {
    if (a.family != b.family) return a.family < b.family;
    return a.rank < b.rank;
  });
  return out;
}

namespace {

// ranks of the simply laced types with Coxeter number h, capped at 24
std::vector<long> simply_laced_ranks(long h) {
  std::vector<long> out;
  if (h >= 2 && h - 1 <= 24) out.push_back(h - 1);  // A_{h-1}
  if (h >= 6 && h % 2 == 0 && h / 2 + 1 <= 24) out.push_back(h / 2 + 1);  // D
  if (h == 12) out.push_back(6);
  if (h == 18) out.push_back(7);
  if (h == 30) out.push_back(8);
  return out;
}

bool rank_expressible(long n, const std::vector<long>& parts) {
  std::vector<char> can(n + 1, 0);
  can[0] = 1;
  for (long p : parts)
    for (long v = p; v <= n; ++v)
      if (can[v - p]) can[v] = 1;
  return can[n];
}

}  // namespace

NoOneEvidence prop_noone_search() {
  NoOneEvidence ev;
  ev.only_k1_survives = true;
  for (long k = 1; k <= 24; ++k)
    for (long h = 2; h <= 46; ++h) {
      if (simply_laced_ranks(h).empty()) continue;
      for (long n = 4; n <= 24; ++n) {
        if (k * n * (h + 1) != 24 * (k + h)) continue;
        NoOneEvidence::Branch b{k, h, n, ""};
        if (k == 1) {
          b.verdict = "niemeier";  // n = 24, a Niemeier root system
        } else if (24 % k != 0) {
          b.verdict = "level does not divide 24";
        } else if (std::gcd(k, h) != 1) {
          b.verdict = "level and dual Coxeter number share a factor";
        } else if (k % 2 == 0) {
          // h odd forces type A_{h-1}: 8 | (h-1)(h+1) but 8 ∤ 12(k+h)
          if ((h - 1) * (h + 1) % 8 != 0 || 12 * (k + h) % 8 == 0)
            b.verdict = "unexcluded";
          else
            b.verdict = "mod-8 obstruction";
        } else if (!rank_expressible(n, simply_laced_ranks(h))) {
          b.verdict = "rank not a sum of simply laced ranks with this Coxeter number";
        } else {
          b.verdict = "unexcluded";
        }
        if (b.verdict == "unexcluded") ev.only_k1_survives = false;
        ev.solutions.push_back(b);
      }
    }
  return ev;
}

const std::vector<Candidate>& surviving_cases() {
  static const std::vector<Candidate> cases = [] {
    using LA = LevelledAlgebra;
    std::vector<Candidate> v;
    v.emplace_back(std::vector<LA>{{SimpleLieType::parse("D9"), 2},
                                   {SimpleLieType::parse("A7"), 1}});
    v.emplace_back(std::vector<LA>{{SimpleLieType::parse("C8"), 1},
                                   {SimpleLieType::parse("F4"), 1},
                                   {SimpleLieType::parse("F4"), 1}});
    v.emplace_back(std::vector<LA>{{SimpleLieType::parse("E7"), 2},
                                   {SimpleLieType::parse("B5"), 1},
                                   {SimpleLieType::parse("F4"), 1}});
    v.emplace_back(std::vector<LA>{{SimpleLieType::parse("E8"), 2},
                                   {SimpleLieType::parse("B8"), 1}});
    return v;
  }();
  return cases;
}

std::vector<InequalityLine> case_inequality_report(const Candidate& c) {
  WReport r = w_report(c);
  std::vector<InequalityLine> out;
  auto push = [&](std::string d, Rat lhs, Rat rhs, std::string rel, bool bad) {
    out.push_back({std::move(d), lhs, rhs, std::move(rel), bad});
  };
  std::string name = c.str();
  if (name == "D9,2+A7,1") {
    // simple-root pairings with α are ≥ 3/4, so ⟨α,α⟩ ≥ (3/4)²⟨ρ,ρ⟩ with
    // ⟨ρ,ρ⟩ = h∨·dim/12 > 2·24/12 = 4 for the resulting rank-24 algebra
    Rat bound = Rat(9, 16) * frac(2 * 24, 12);
    push("⟨α,α⟩ vs (3/4)²·h∨·dim/12 with h∨ ≥ 2, dim > 24", r.alpha_norm,
         bound, ">=, but the right side strictly exceeds the bound", true);
  } else if (name == "C8,1+F4,1^2" || name == "E7,2+B5,1+F4,1") {
    // pairings are ≥ 2/3 and only A_q^{24/q} with q ≤ 2 can occur
    for (long q = 1; q <= 2; ++q) {
      Rat rhs = frac(8 * (q + 1) * (q + 2), 9);
      push("⟨α,α⟩ vs (2/3)²⟨ρ,ρ⟩ for A_" + std::to_string(q) + "^" +
               std::to_string(24 / q),
           r.alpha_norm, rhs, ">=", rhs > r.alpha_norm);
    }
  } else if (name == "E8,2+B8,1") {
    for (long q = 4; q >= 1; --q) {
      Rat rhs = frac(8 * (q + 1) * (q + 2), 25);
      bool bad = rhs > r.alpha_norm;
      push("⟨α,α⟩ vs (2/5)²⟨ρ,ρ⟩ for A_" + std::to_string(q) + "^" +
               std::to_string(24 / q),
           r.alpha_norm, rhs,
           bad ? ">= fails" : ">= holds; forces q = 1", bad);
    }
    // with q = 1 and j ≤ 12 root vectors in the short orbits,
    // ⟨α,(2/5)ρ⟩ ≥ (240−2j)/75 ≥ 216/75
    Rat rhs = frac(240 - 2 * 12, 75);
    push("⟨α,α⟩ vs ⟨α,(2/5)ρ⟩ ≥ (240−2j)/75, j ≤ 12", r.alpha_norm, rhs,
         ">=", rhs > r.alpha_norm);
  } else {
    throw std::domain_error("not one of the surviving cases: " + name);
  }
  return out;
}

}  // namespace lal
