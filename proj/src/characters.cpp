#include "lal/characters.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lal/frames.hpp"

namespace lal {

namespace {

// quotient of monic integer polynomials, ascending coefficients
std::vector<Int> poly_div(std::vector<Int> num, const std::vector<Int>& den) {
  std::vector<Int> q(num.size() - den.size() + 1, 0);
  for (long i = q.size() - 1; i >= 0; --i) {
    Int lead = num[i + den.size() - 1];
    q[i] = lead;
    for (std::size_t j = 0; j < den.size(); ++j)
      num[i + j] -= lead * den[j];
  }
  for (const Int& v : num)
    if (v != 0) throw std::logic_error("non-exact polynomial division");
  return q;
}

}  // namespace

std::vector<Int> cyclotomic_poly(long n) {
  if (n < 1) throw std::domain_error("cyclotomic index must be positive");
  std::vector<Int> p(n + 1, 0);  // x^n - 1
  p[0] = -1;
  p[n] = 1;
  for (long d : divisors(n))
    if (d < n) p = poly_div(p, cyclotomic_poly(d));
  return p;
}

namespace {

const std::vector<Int>& phi_cached(long r) {
  static std::map<long, std::vector<Int>> cache;
  auto it = cache.find(r);
  if (it == cache.end()) it = cache.emplace(r, cyclotomic_poly(r)).first;
  return it->second;
}

}  // namespace

Cyclo Cyclo::zero(long r) {
  return Cyclo{r, std::vector<Rat>(euler_phi(r), Rat(0))};
}

Cyclo Cyclo::rational(long r, const Rat& q) {
  Cyclo v = zero(r);
  v.c[0] = q;
  return v;
}

Cyclo Cyclo::root_power(long r, long k) {
  k %= r;
  if (k < 0) k += r;
  const auto& phi = phi_cached(r);
  long deg = phi.size() - 1;
  // reduce x^k modulo the monic Φ_r
  std::vector<Rat> v(std::max<long>(k + 1, deg), Rat(0));
  v[k] = 1;
  for (long i = v.size() - 1; i >= deg; --i) {
    Rat lead = v[i];
    if (lead == 0) continue;
    v[i] = 0;
    for (long j = 0; j < deg; ++j) v[i - deg + j] -= lead * Rat(phi[j]);
  }
  Cyclo out = zero(r);
  for (long i = 0; i < deg; ++i) out.c[i] = v[i];
  return out;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
  if (r != o.r) throw std::domain_error("mixed cyclotomic fields");
  Cyclo v = *this;
  for (std::size_t i = 0; i < c.size(); ++i) v.c[i] += o.c[i];
  return v;
}

Cyclo Cyclo::operator*(const Rat& q) const {
  Cyclo v = *this;
  for (auto& x : v.c) x *= q;
  return v;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
  if (r != o.r) throw std::domain_error("mixed cyclotomic fields");
  Cyclo v = zero(r);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    for (std::size_t j = 0; j < o.c.size(); ++j) {
      if (o.c[j] == 0) continue;
      Cyclo t = root_power(r, i + j) * (c[i] * o.c[j]);
      v = v + t;
    }
  }
  return v;
}

bool Cyclo::is_rational() const {
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) return false;
  return true;
}

Rat Cyclo::rational_part() const {
  if (!is_rational()) throw std::domain_error("value is not rational: " + str());
  return c[0];
}

std::string Cyclo::str() const {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += rat_str(c[i]);
    if (i > 0) s += "·z" + std::to_string(r) + "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

namespace {

long elem_order(long a, long b, long i, long j) {
  long oi = b / std::gcd(b, i == 0 ? b : i);
  long oj = a / std::gcd(a, j == 0 ? a : j);
  return std::lcm(oi, oj);
}

struct Assigner {
  long a, b;
  std::vector<std::pair<long, long>> elems;
  std::map<std::string, int> remaining;
  std::map<std::pair<long, long>, std::string> out;
  bool sigma_not_minus_2a = false;  // keep σ out of class -2A when possible

  bool compatible(long i, long j, const std::string& name) {
    if (sigma_not_minus_2a && i == 0 && j == 1 && name == "-2A") return false;
    const FrameShape& shape = class_by_name(name).shape;
    if (shape_order(shape) != elem_order(a, b, i, j)) return false;
    // power-map consistency against everything already assigned
    for (const auto& [e, other] : out) {
      const FrameShape& os = class_by_name(other).shape;
      long oo = shape_order(os);
      for (long k = 1; k <= oo; ++k)
        if (std::make_pair(e.first * k % b, e.second * k % a) ==
                std::make_pair(i, j) &&
            power(os, k) != shape)
          return false;
      long o = shape_order(shape);
      for (long k = 1; k <= o; ++k)
        if (std::make_pair(i * k % b, j * k % a) == e && power(shape, k) != os)
          return false;
    }
    return true;
  }

  bool solve(std::size_t idx) {
    if (idx == elems.size()) return true;
    auto [i, j] = elems[idx];
    for (auto& [name, count] : remaining) {
      if (count == 0 || !compatible(i, j, name)) continue;
      --count;
      out[{i, j}] = name;
      if (solve(idx + 1)) return true;
      out.erase({i, j});
      ++count;
    }
    return false;
  }
};

}  // namespace

AbelianSubgroup AbelianSubgroup::from_classes(
    long a, long b, const std::vector<std::string>& multiset) {
  if (a < 1 || b < 1 || b % a != 0)
    throw std::domain_error("invariant factors must satisfy a | b");
  if (static_cast<long>(multiset.size()) != a * b)
    throw std::domain_error("class multiset size must equal the group order");
  Assigner as;
  as.a = a;
  as.b = b;
  for (long i = 0; i < b; ++i)
    for (long j = 0; j < a; ++j) as.elems.emplace_back(i, j);
  for (const auto& n : multiset) ++as.remaining[n];
  if (as.remaining["1A"] < 1)
    throw std::domain_error("multiset must contain the identity class 1A");
  as.sigma_not_minus_2a = true;
  if (!as.solve(0)) {
    as.sigma_not_minus_2a = false;
    if (!as.solve(0))
      throw std::domain_error("no order/power-consistent class assignment");
  }
  AbelianSubgroup g;
  g.a = a;
  g.b = b;
  g.cls = std::move(as.out);
  return g;
}

const std::string& AbelianSubgroup::class_of(long i, long j) const {
  auto it = cls.find({(i % b + b) % b, (j % a + a) % a});
  if (it == cls.end()) throw std::domain_error("incomplete class assignment");
  return it->second;
}

long AbelianSubgroup::chi(long i, long j) const {
  return trace(class_by_name(class_of(i, j)).shape);
}

const std::vector<CensusRow>& census() {
  static const std::vector<CensusRow> rows = {
      {1, 6, 2, 2, {"1A", "2A", "-2A", "2C"}},
      {2, 6, 2, 2, {"1A", "2C", "2C", "2C"}},
      {3, 6, 2, 4, {"1A", "2A", "2A", "-2A", "4C", "4C", "4C", "4C"}},
      {4, 6, 2, 4, {"1A", "2A", "2C", "2C", "4C", "4C", "4C", "4C"}},
      {5, 6, 2, 4, {"1A", "2A", "2A", "2C", "4C", "4C", "4D", "4D"}},
      {6, 6, 2, 4, {"1A", "2A", "2A", "2A", "4C", "4C", "-4C", "-4C"}},
      {7, 6, 2, 4, {"1A", "2A", "2A", "2A", "4D", "4D", "4D", "4D"}},
      {8, 6, 3, 3, {"1A", "3B", "3B", "3B", "3B", "3B", "3B", "3C", "3C"}},
      {9, 6, 2, 6,
       {"1A", "2A", "2A", "2A", "3B", "3B", "6E", "6E", "6E", "6E", "6E",
        "6E"}},
      {10, 6, 4, 4,
       {"1A", "2A", "2A", "2A", "4C", "4C", "4C", "4C", "4C", "4C", "4C", "4C",
        "4C", "4C", "4C", "4C"}},
      {11, 8, 2, 2, {"1A", "2A", "2C", "2C"}},
      {12, 8, 2, 2, {"1A", "2A", "2A", "-2A"}},
      {13, 8, 2, 4, {"1A", "2A", "2A", "2A", "4C", "4C", "4C", "4C"}},
      {14, 8, 2, 4, {"1A", "2A", "2A", "-2A", "-4A", "-4A", "-4A", "-4A"}},
      {15, 8, 3, 3, {"1A", "3B", "3B", "3B", "3B", "3B", "3B", "3B", "3B"}},
      {16, 10, 2, 2, {"1A", "2A", "2A", "2C"}},
      {17, 12, 2, 2, {"1A", "2A", "2A", "2A"}},
  };
  return rows;
}

AbelianSubgroup census_group(int index) {
  for (const auto& row : census())
    if (row.index == index)
      return AbelianSubgroup::from_classes(row.a, row.b, row.classes);
  throw std::domain_error("census row " + std::to_string(index) + " not found");
}

InnerProduct inner_product(const AbelianSubgroup& g,
                           const LinearCharacter& theta) {
  if (theta.r < 1 || g.b % theta.r != 0)
    throw std::domain_error("character order must divide the order of the first generator");
  if (std::gcd(theta.e, theta.r) != 1)
    throw std::domain_error("character exponent must be coprime to its order");
  Cyclo sum = Cyclo::zero(theta.r);
  for (long i = 0; i < g.b; ++i)
    for (long j = 0; j < g.a; ++j) {
      // χ(g⁻¹); every frame shape is real, asserted against χ(g)
      long chi_inv = g.chi(g.b - i, g.a - j);
      if (chi_inv != g.chi(i, j))
        throw std::logic_error("non-real character value in assignment");
      sum = sum + Cyclo::root_power(theta.r, theta.e * i) * Rat(chi_inv);
    }
  InnerProduct out{sum * frac(1, g.order()), false, 0};
  if (out.value.is_rational() && is_integer(out.value.rational_part())) {
    out.integral = true;
    out.scaled = out.value.rational_part().get_num() * g.order();
  }
  return out;
}

long z2z4_reduced(long chi_tau2, long chi_tau2sigma, long chi_sigma) {
  for (long v : {chi_tau2, chi_tau2sigma, chi_sigma})
    if (v != 8 && v != -8 && v != 0)
      throw std::domain_error("involution character values must be 8, -8, or 0");
  return 24 - chi_tau2 - chi_tau2sigma + chi_sigma;
}

Z2Z4Report z2z4_formula(const AbelianSubgroup& g) {
  if (g.a != 2 || g.b != 4)
    throw std::domain_error("group is not of type Z2 x Z4");
  Z2Z4Report rep{g.chi(2, 0), g.chi(2, 1), g.chi(0, 1), 0, false};
  rep.value = z2z4_reduced(rep.chi_tau2, rep.chi_tau2sigma, rep.chi_sigma);
  rep.positive = g.class_of(0, 1) != "-2A" && rep.value > 0;
  // the reduction must match the full sum
  InnerProduct full = inner_product(g, {4, 1});
  if (!full.integral || full.scaled != rep.value)
    throw std::logic_error("hand reduction disagrees with the full sum");
  return rep;
}

}  // namespace lal
