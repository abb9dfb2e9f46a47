#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "lal/frames.hpp"
#include "lal/lattice.hpp"
#include "lal/lie.hpp"

using namespace lal;

namespace {

MatQ root_gram(const char* name) {
  const auto& rs = root_system(SimpleLieType::parse(name));
  MatQ g(rs.simple_roots.size(), rs.simple_roots.size());
  for (std::size_t i = 0; i < rs.simple_roots.size(); ++i)
    for (std::size_t j = 0; j < rs.simple_roots.size(); ++j)
      g(i, j) = rs.ip(rs.simple_roots[i], rs.simple_roots[j]);
  return g;
}

// a modest random unimodular matrix built from elementary row operations
MatI random_unimodular(std::size_t n, std::mt19937& rng) {
  MatI u(n, n);
  for (std::size_t i = 0; i < n; ++i) u(i, i) = 1;
  std::uniform_int_distribution<std::size_t> row(0, n - 1);
  std::uniform_int_distribution<int> coef(-1, 1);
  for (int step = 0; step < 12; ++step) {
    std::size_t i = row(rng), j = row(rng);
    int c = coef(rng);
    if (i == j || c == 0) continue;
    for (std::size_t k = 0; k < n; ++k) u(i, k) += c * u(j, k);
  }
  return u;
}

MatQ transform(const MatQ& g, const MatI& u) {
  std::size_t n = g.rows();
  MatQ out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rat s = 0;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          s += Rat(u(i, k)) * g(k, l) * Rat(u(j, l));
      out(i, j) = s;
    }
  return out;
}

}  // namespace

TEST_CASE("frame shapes round trip through cyclotomic form") {
  for (const auto& row : class_table()) {
    CHECK(from_cyclotomic(to_cyclotomic(row.shape)) == row.shape);
    CHECK(FrameShape::parse(row.shape.str()) == row.shape);
  }
}

TEST_CASE("power is a monoid action: 500 random triples") {
  std::mt19937 rng(20240824);
  std::uniform_int_distribution<std::size_t> pick(0, class_table().size() - 1);
  std::uniform_int_distribution<long> exp(1, 60);
  for (int t = 0; t < 500; ++t) {
    const auto& row = class_table()[pick(rng)];
    long j = exp(rng), k = exp(rng);
    CHECK(power(power(row.shape, j), k) == power(row.shape, j * k));
  }
}

TEST_CASE("short vectors are basis invariant: 20 random unimodular transforms") {
  std::mt19937 rng(77);
  for (const char* name : {"A2", "D4", "E8"}) {
    GramLattice base(root_gram(name));
    auto ref = short_vectors(base, 4);
    for (int t = 0; t < 20; ++t) {
      MatI u = random_unimodular(base.rank, rng);
      GramLattice moved(transform(base.gram, u));
      auto got = short_vectors(moved, 4);
      CHECK(got.count == ref.count);
      CHECK(got.reps.size() == ref.reps.size());
      CHECK(moved.determinant() == base.determinant());
      // the norm multiset must match
      std::multiset<Rat> a, b;
      for (const auto& [v, n] : ref.reps) a.insert(n);
      for (const auto& [v, n] : got.reps) b.insert(n);
      CHECK(a == b);
    }
  }
}

TEST_CASE("discriminant group order equals |det|") {
  // simply laced and B-type systems give integral simple-root Grams
  for (const char* name : {"A1", "A2", "A3", "A5", "B2", "B3", "B4", "D4",
                           "D5", "D6", "E6", "E7", "E8"}) {
    GramLattice l(root_gram(name));
    Rat d = l.determinant();
    CHECK(discriminant_group(l).order() == abs(d.get_num()));
  }
  // direct sums multiply determinants and discriminant orders
  GramLattice s = direct_sum(GramLattice(root_gram("A2")),
                             GramLattice(root_gram("D4")));
  CHECK(discriminant_group(s).order() == 12);
  CHECK(s.determinant() == 12);
}
