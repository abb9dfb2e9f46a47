#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lal/matrix.hpp"
#include "lal/rat.hpp"

namespace lal {

// An exact quadratic lattice given by its Gram matrix.
struct GramLattice {
  std::size_t rank = 0;
  MatQ gram;

  GramLattice() = default;
  explicit GramLattice(MatQ g);

  bool is_integral() const;
  bool is_even() const;
  Rat determinant() const;
  bool is_unimodular() const;

  // inertia (p, q, z): positive, negative and zero squares
  struct Signature {
    std::size_t pos, neg, zero;
  };
  Signature signature() const;
  bool positive_definite() const {
    auto s = signature();
    return s.pos == rank;
  }
};

GramLattice direct_sum(const GramLattice& a, const GramLattice& b);

// rank-2 even lattice with Gram [[0,-1],[-1,0]], signature (1,1)
GramLattice hyperbolic_plane();

struct DiscriminantGroup {
  std::vector<Int> invariant_factors;  // d1 | d2 | ..., each > 1
  Int order() const;
};

DiscriminantGroup discriminant_group(const GramLattice& l);

// ρ^⊥/ℤρ for a primitive isotropic ρ in an even Lorentzian lattice.
GramLattice quotient_by_isotropic(const GramLattice& m, const std::vector<Int>& rho);

// Nonzero vectors v with 0 < ⟨v,v⟩ ≤ bound, up to sign; `count` doubles them.
struct ShortVectors {
  std::vector<std::pair<std::vector<Int>, Rat>> reps;  // vector, norm
  Int count;  // total including negatives
};

ShortVectors short_vectors(const GramLattice& l, const Rat& bound);

// count of v with ⟨v,v⟩ = norm exactly (both signs counted)
Int vector_count(const GramLattice& l, const Rat& norm);

// rank-24, even, det 1, no norm-2 vectors
bool is_leech(const GramLattice& l);

// textual lattice file format: bit-exact round trip
void write_lattice(std::ostream& os, const GramLattice& l);
GramLattice read_lattice(std::istream& is);
std::string lattice_to_string(const GramLattice& l);
GramLattice lattice_from_string(const std::string& s);

}  // namespace lal
