#pragma once

#include <map>
#include <string>
#include <vector>

#include "lal/rat.hpp"

namespace lal {

// A degree-24 rational characteristic polynomial ∏(x^n − 1)^{m_n}, written
// multiplicatively; negative exponents allowed as long as the cyclotomic
// factorization stays polynomial.
struct FrameShape {
  std::map<long, long> m;  // n -> m_n, zero entries dropped

  // grammar: "1^8 2^8 / 2^8" (numerator, optional / denominator; ^1 optional)
  static FrameShape parse(const std::string& s);
  std::string str() const;

  bool operator==(const FrameShape&) const = default;
};

// The same polynomial as multiplicities of cyclotomic factors Φ_d.
struct CycloMultiset {
  std::map<long, long> a;  // d -> a_d >= 0, zero entries dropped

  long order() const;  // lcm of the support
  bool operator==(const CycloMultiset&) const = default;
};

// a_d = Σ_{d|n} m_n; throws if some a_d < 0 or the degree is not 24.
CycloMultiset to_cyclotomic(const FrameShape& f);
// Möbius inversion m_n = Σ_{n|d} μ(d/n)·a_d; throws if the degree is not 24.
FrameShape from_cyclotomic(const CycloMultiset& c);

long fixed_dim(const FrameShape& f);             // Σ m_n, = a_1
long trace(const FrameShape& f);                 // m_1
long eig_mult(const FrameShape& f, long r);      // Σ_{r|n} m_n, = a_r
long shape_order(const FrameShape& f);           // lcm{d : a_d > 0}
FrameShape power(const FrameShape& f, long k);   // shape of the k-th power

// One conjugacy class with nonzero fixed subspace in the orthogonal group of
// the 24-dimensional lattice.
struct ClassRow {
  std::string name;
  FrameShape shape;
  long fixed;
};

const std::vector<ClassRow>& class_table();  // validated at first use
const ClassRow& class_by_name(const std::string& name);

// Names of the table classes with this exact shape ({23A, 23B} share one).
std::vector<std::string> classify_shape(const FrameShape& f);

}  // namespace lal
