#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "lal/matrix.hpp"
#include "lal/rat.hpp"

namespace lal {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// A classified finite simple type X_n. Supported ranks are capped at 24.
struct SimpleLieType {
  Family family;
  int rank;

  SimpleLieType(Family f, int r);

  auto operator<=>(const SimpleLieType&) const = default;

  std::string name() const;
  static SimpleLieType parse(const std::string& s);
};

struct AlgebraInfo {
  long dim;
  long rank;
  long coxeter;       // h
  long dual_coxeter;  // h∨
  long lacing;        // r
};

AlgebraInfo algebra_info(SimpleLieType t);

using Vec = std::vector<Rat>;

Rat dot(const Vec& a, const Vec& b);

// Root system in explicit rational coordinates, normalized so that
// (β|β) = 2 for long roots β: the form is form_scale * (euclidean dot).
struct RootSystem {
  SimpleLieType type;
  std::size_t ambient;
  Rat form_scale;
  std::vector<Vec> simple_roots;
  std::vector<Vec> positive_roots;
  std::vector<Vec> roots;  // positive then negative, deterministic order
  std::vector<Vec> fundamental_weights;
  Vec weyl_vector;   // ρ = sum of fundamental weights
  Vec highest_root;  // θ
  std::vector<long> marks;  // θ = Σ marks[i]·α_i

  RootSystem(SimpleLieType t) : type(t) {}

  // normalized Killing form
  Rat ip(const Vec& a, const Vec& b) const { return form_scale * dot(a, b); }

  // ⟨v, α∨⟩ = 2(v|α)/(α|α); the form scale cancels
  Rat coroot_pairing(const Vec& v, const Vec& alpha) const {
    return 2 * dot(v, alpha) / dot(alpha, alpha);
  }

  Vec weight_from_labels(const std::vector<long>& labels) const;
  std::vector<long> labels_of(const Vec& w) const;

  // level of λ: pairing against the highest coroot θ∨
  Rat theta_level(const Vec& w) const { return coroot_pairing(w, highest_root); }
};

const RootSystem& root_system(SimpleLieType t);

// (ρ|ρ); asserts the explicit inner product against h∨·dim/12
Rat weyl_vector_norm(SimpleLieType t);

struct LevelledAlgebra {
  SimpleLieType type;
  long level;

  LevelledAlgebra(SimpleLieType t, long k);
  auto operator<=>(const LevelledAlgebra&) const = default;
};

// All dominant integral weights λ (as Dynkin labels) with ⟨λ,θ∨⟩ ≤ k.
std::vector<std::vector<long>> integrable_weights(const LevelledAlgebra& a);

struct WeightMultiset {
  // every weight of V(λ) with its multiplicity; deterministic order
  std::vector<std::pair<Vec, Int>> entries;
  Int total;  // Σ multiplicities = dim V(λ)
};

// Weights of the irreducible module V(λ) with Freudenthal multiplicities.
WeightMultiset weight_system(SimpleLieType t, const std::vector<long>& labels);

// dim V(λ) by the Weyl dimension formula (independent of weight_system)
Int weyl_dim(SimpleLieType t, const std::vector<long>& labels);

// max over the weights μ of V(λ) of (ρ|μ), by direct enumeration
Rat max_rho_pairing(SimpleLieType t, const std::vector<long>& labels);

}  // namespace lal
