#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lal/rat.hpp"

namespace lal {

// Coefficients of the n-th cyclotomic polynomial, ascending, monic.
std::vector<Int> cyclotomic_poly(long n);

// An element of ℚ(ζ_r) in the power basis 1, ζ, ..., ζ^{φ(r)−1} mod Φ_r.
struct Cyclo {
  long r;
  std::vector<Rat> c;

  static Cyclo zero(long r);
  static Cyclo rational(long r, const Rat& q);
  static Cyclo root_power(long r, long k);  // ζ_r^k

  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo operator*(const Rat& q) const;
  bool operator==(const Cyclo&) const = default;

  bool is_rational() const;
  Rat rational_part() const;  // throws when not rational
  std::string str() const;
};

// A rank ≤ 2 abelian subgroup ⟨τ, σ⟩ with every element τ^i σ^j assigned a
// class from the frame-shape table; τ has order b, σ order a, a | b.
struct AbelianSubgroup {
  long a = 1, b = 1;
  std::map<std::pair<long, long>, std::string> cls;  // (i, j) -> class of τ^i σ^j

  // Finds a per-element assignment realizing the class multiset, consistent
  // with element orders and the power map on frame shapes.
  static AbelianSubgroup from_classes(long a, long b,
                                      const std::vector<std::string>& multiset);
  long order() const { return a * b; }
  const std::string& class_of(long i, long j) const;
  long chi(long i, long j) const;  // trace of the assigned class
};

// One row of the fixed-subgroup census: index, dim of the fixed space, group
// type, and the class multiset.
struct CensusRow {
  int index;
  long dim_fixed;
  long a, b;
  std::vector<std::string> classes;
};

const std::vector<CensusRow>& census();  // 17 rows, dim 6/8/10/12
AbelianSubgroup census_group(int index);

// θ(τ^i σ^j) = ζ_r^{e·i}; σ is in the kernel, r divides the order of τ.
struct LinearCharacter {
  long r;
  long e = 1;
};

struct InnerProduct {
  Cyclo value;   // ⟨θ, χ⟩ = (1/|G|) Σ θ(g) χ(g⁻¹)
  bool integral; // value is a rational integer
  Int scaled;    // |G|·value when integral
};

InnerProduct inner_product(const AbelianSubgroup& g, const LinearCharacter& theta);

// The hand reduction 8⟨θ,χ⟩ = 24 − χ(τ²) − χ(τ²σ) + χ(σ) for G ≅ ℤ2×ℤ4.
long z2z4_reduced(long chi_tau2, long chi_tau2sigma, long chi_sigma);

struct Z2Z4Report {
  long chi_tau2, chi_tau2sigma, chi_sigma;
  long value;     // 8⟨θ,χ⟩
  bool positive;  // guaranteed when σ is not in class -2A
};

Z2Z4Report z2z4_formula(const AbelianSubgroup& g);

}  // namespace lal
