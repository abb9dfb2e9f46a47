#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lal/lattice.hpp"
#include "lal/lie.hpp"

namespace lal {

// A rank-24 even unimodular lattice with nonempty root system, identified by
// its root system, e.g. "A5^4+D4". Components are kept in canonical order
// (decreasing rank, then family letter).
struct NiemeierName {
  std::vector<std::pair<SimpleLieType, int>> components;  // type, multiplicity

  static NiemeierName parse(const std::string& s);
  std::string str() const;
  long total_rank() const;
};

// canonical names of all 23 lattices, ordered by decreasing Coxeter number
const std::vector<std::string>& niemeier_names();

struct NiemeierLattice {
  NiemeierName name;
  long coxeter;        // common Coxeter number h of the components
  GramLattice lattice; // 24x24 even unimodular Gram matrix
  MatQ basis;          // lattice basis, rows of coefficients over simple roots
  MatQ root_gram;      // Gram of the underlying simple-root coordinate space
  std::vector<Int> weyl;  // Weyl vector of the root system, in lattice coords

  Rat weyl_norm() const;  // = 2h(h+1)
};

// Builds the lattice from its root system and glue code; validates that the
// result is even and unimodular and that the Weyl vector has norm 2h(h+1).
NiemeierLattice build_niemeier(const std::string& name);

// number of norm-2 vectors; equals 24h
Int niemeier_root_count(const NiemeierLattice& n);

// ρ^⊥/ℤρ in N ⊕ Π₁,₁ for the isotropic vector ρ = (Weyl vector, h, h+1).
struct HoleConstruction {
  NiemeierLattice niemeier;
  GramLattice lorentzian;  // N ⊕ Π₁,₁, signature (25,1)
  std::vector<Int> rho;    // primitive isotropic vector
  GramLattice quotient;    // rank 24; the Leech lattice
  bool certified;          // even, det 1, no norm-2 vectors
};

HoleConstruction hole_construction(const std::string& name);

}  // namespace lal
