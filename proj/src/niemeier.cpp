#include "lal/niemeier.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lal {

namespace {

// One glue code generator per string; digits address the components in row
// order, one digit per copy. "1(012)" means prefix 1 followed by every cyclic
// shift of the block 012, giving one word per shift.
struct GlueRow {
  const char* name;        // canonical component name
  long h;                  // common Coxeter number
  std::vector<std::pair<const char*, int>> comps;  // table order
  std::vector<const char*> words;                  // compact generator words
};

const std::vector<GlueRow>& glue_table() {
  static const std::vector<GlueRow> t = {
      {"D24", 46, {{"D24", 1}}, {"1"}},
      {"D16+E8", 30, {{"D16", 1}, {"E8", 1}}, {"10"}},
      {"E8^3", 30, {{"E8", 3}}, {}},
      {"A24", 25, {{"A24", 1}}, {"5"}},
      {"D12^2", 22, {{"D12", 2}}, {"12", "21"}},
      {"A17+E7", 18, {{"A17", 1}, {"E7", 1}}, {"31"}},
      {"D10+E7^2", 18, {{"D10", 1}, {"E7", 2}}, {"110", "301"}},
      {"A15+D9", 16, {{"A15", 1}, {"D9", 1}}, {"21"}},
      {"D8^3", 14, {{"D8", 3}}, {"(122)"}},
      {"A12^2", 13, {{"A12", 2}}, {"15"}},
      {"A11+D7+E6", 12, {{"A11", 1}, {"D7", 1}, {"E6", 1}}, {"111"}},
      {"E6^4", 12, {{"E6", 4}}, {"1(012)"}},
      {"A9^2+D6", 10, {{"A9", 2}, {"D6", 1}}, {"240", "501", "053"}},
      {"D6^4", 10, {{"D6", 4}}, {"even(0123)"}},
      {"A8^3", 9, {{"A8", 3}}, {"(114)"}},
      {"A7^2+D5^2", 8, {{"A7", 2}, {"D5", 2}}, {"1112", "1721"}},
      {"A6^4", 7, {{"A6", 4}}, {"1(216)"}},
      {"A5^4+D4",
       6,
       {{"A5", 4}, {"D4", 1}},
       {"2(024)0", "33001", "30302", "30033"}},
      {"D4^6",
       6,
       {{"D4", 6}},
       // hexacode basis together with its ω-multiples
       {"100132", "200213", "010123", "020231", "001111", "002222"}},
      {"A4^6", 5, {{"A4", 6}}, {"1(01441)"}},
      {"A3^8", 4, {{"A3", 8}}, {"3(2001011)"}},
      {"A2^12", 3, {{"A2", 12}}, {"2(11211122212)"}},
      {"A1^24", 2, {{"A1", 24}}, {"1(00000101001100110101111)"}},
  };
  return t;
}

std::vector<std::string> expand_word(const std::string& w) {
  if (w.starts_with("even(")) {
    // all arrangements of the digits with an even number of inversions
    std::string digits = w.substr(5, w.size() - 6);
    std::sort(digits.begin(), digits.end());
    std::vector<std::string> out;
    do {
      int inv = 0;
      for (std::size_t i = 0; i < digits.size(); ++i)
        for (std::size_t j = i + 1; j < digits.size(); ++j)
          if (digits[i] > digits[j]) ++inv;
      if (inv % 2 == 0) out.push_back(digits);
    } while (std::next_permutation(digits.begin(), digits.end()));
    return out;
  }
  auto open = w.find('(');
  if (open == std::string::npos) return {w};
  auto close = w.find(')');
  if (close == std::string::npos || close < open)
    throw std::logic_error("bad glue word " + w);
  std::string pre = w.substr(0, open);
  std::string block = w.substr(open + 1, close - open - 1);
  std::string post = w.substr(close + 1);
  std::vector<std::string> out;
  for (std::size_t s = 0; s < block.size(); ++s)
    out.push_back(pre + block.substr(s) + block.substr(0, s) + post);
  return out;
}

// coefficients over the simple roots of the glue class representative:
// column of the inverse Cartan matrix picked by the digit
std::vector<Rat> glue_coefficients(SimpleLieType t, int digit) {
  const auto& rs = root_system(t);
  const std::size_t n = rs.simple_roots.size();
  std::vector<Rat> c(n, Rat(0));
  if (digit == 0) return c;
  long idx = -1;  // fundamental weight index, 0-based
  switch (t.family) {
    case Family::A:
      if (digit > t.rank) throw std::logic_error("glue digit out of range");
      idx = digit - 1;
      break;
    case Family::D:
      if (digit == 1) idx = t.rank - 1;       // spinor class s
      else if (digit == 2) idx = 0;           // vector class v
      else if (digit == 3) idx = t.rank - 2;  // spinor class c
      else throw std::logic_error("glue digit out of range");
      break;
    case Family::E:
      if (t.rank == 6 && digit == 1) idx = 0;
      else if (t.rank == 6 && digit == 2) idx = 5;
      else if (t.rank == 7 && digit == 1) idx = 6;
      else throw std::logic_error("glue digit out of range");
      break;
    default:
      throw std::logic_error("glue digit out of range");
  }
  // solve G c = e_idx where G is the (symmetric, simply laced) Cartan Gram
  MatQ g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      g(i, j) = rs.ip(rs.simple_roots[i], rs.simple_roots[j]);
  std::vector<Rat> e(n, Rat(0));
  e[idx] = 1;
  return solve(g, e);
}

const GlueRow& find_row(const std::string& canonical) {
  for (const auto& r : glue_table())
    if (canonical == r.name) return r;
  throw std::domain_error("unknown lattice: " + canonical);
}

}  // namespace

NiemeierName NiemeierName::parse(const std::string& s) {
  NiemeierName n;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, '+')) {
    if (part.empty()) throw std::domain_error("bad component list: " + s);
    int mult = 1;
    auto caret = part.find('^');
    std::string type = part;
    if (caret != std::string::npos) {
      type = part.substr(0, caret);
      mult = std::stoi(part.substr(caret + 1));
      if (mult < 1) throw std::domain_error("bad multiplicity in " + s);
    }
    n.components.emplace_back(SimpleLieType::parse(type), mult);
  }
  if (n.components.empty()) throw std::domain_error("empty component list");
  // canonical order: decreasing rank, then family letter; merge duplicates
  std::sort(n.components.begin(), n.components.end(),
            [](const auto& a, const auto& b) {
              if (a.first.rank != b.first.rank)
                return a.first.rank > b.first.rank;
              return a.first.family < b.first.family;
            });
  std::vector<std::pair<SimpleLieType, int>> merged;
  for (const auto& [t, m] : n.components) {
    if (!merged.empty() && merged.back().first == t)
      merged.back().second += m;
    else
      merged.emplace_back(t, m);
  }
  n.components = std::move(merged);
  return n;
}

std::string NiemeierName::str() const {
  std::string s;
  for (const auto& [t, m] : components) {
    if (!s.empty()) s += "+";
    s += t.name();
    if (m > 1) s += "^" + std::to_string(m);
  }
  return s;
}

long NiemeierName::total_rank() const {
  long r = 0;
  for (const auto& [t, m] : components) r += t.rank * m;
  return r;
}

const std::vector<std::string>& niemeier_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& r : glue_table()) v.push_back(r.name);
    return v;
  }();
  return names;
}

Rat NiemeierLattice::weyl_norm() const {
  Rat s = 0;
  for (std::size_t i = 0; i < 24; ++i)
    for (std::size_t j = 0; j < 24; ++j)
      s += Rat(weyl[i]) * lattice.gram(i, j) * Rat(weyl[j]);
  return s;
}

NiemeierLattice build_niemeier(const std::string& name) {
  NiemeierName nn = NiemeierName::parse(name);
  const GlueRow& row = find_row(nn.str());
  if (nn.total_rank() != 24) throw std::logic_error("rank must be 24");

  // component layout: one copy per glue digit position
  struct Slot {
    SimpleLieType type;
    std::size_t offset;
  };
  std::vector<Slot> slots;
  std::size_t off = 0;
  long h = 0;
  for (const auto& [tname, mult] : row.comps) {
    SimpleLieType t = SimpleLieType::parse(tname);
    long th = algebra_info(t).coxeter;
    if (h == 0) h = th;
    if (th != h) throw std::logic_error("components have unequal Coxeter numbers");
    for (int c = 0; c < mult; ++c) {
      slots.push_back({t, off});
      off += t.rank;
    }
  }
  if (off != 24) throw std::logic_error("rank must be 24");

  // Gram of the simple-root coordinate space: block Cartan matrices
  MatQ gq(24, 24);
  for (const auto& s : slots) {
    const auto& rs = root_system(s.type);
    const std::size_t r = rs.simple_roots.size();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        gq(s.offset + i, s.offset + j) =
            rs.ip(rs.simple_roots[i], rs.simple_roots[j]);
  }

  // generators: the simple roots plus one glue vector per code word
  std::vector<std::vector<Rat>> gens;
  for (std::size_t i = 0; i < 24; ++i) {
    std::vector<Rat> e(24, Rat(0));
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  for (const auto* cw : row.words)
    for (const auto& word : expand_word(cw)) {
      if (word.size() != slots.size())
        throw std::logic_error("glue word length mismatch");
      std::vector<Rat> v(24, Rat(0));
      for (std::size_t s = 0; s < slots.size(); ++s) {
        auto c = glue_coefficients(slots[s].type, word[s] - '0');
        for (std::size_t i = 0; i < c.size(); ++i)
          v[slots[s].offset + i] = c[i];
      }
      gens.push_back(std::move(v));
    }

  // Hermite form of the scaled generator stack gives a 24-row basis
  Int den = 1;
  for (const auto& g : gens)
    for (const auto& c : g) den = lcm(den, c.get_den());
  MatI stack(gens.size(), 24);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < 24; ++j) {
      Rat scaled = gens[i][j] * Rat(den);
      stack(i, j) = scaled.get_num();
    }
  HnfResult hr = hnf(stack);
  if (hr.rank != 24) throw std::logic_error("glue generators are degenerate");
  MatQ basis(24, 24);
  for (std::size_t i = 0; i < 24; ++i)
    for (std::size_t j = 0; j < 24; ++j)
      basis(i, j) = frac(hr.h(i, j), den);

  MatQ gram = basis * gq * basis.transpose();
  GramLattice lat(gram);
  if (!lat.is_even() || lat.determinant() != 1)
    throw std::logic_error("glue code does not give an even unimodular lattice");

  // Weyl vector: ⟨ρ, α⟩ = 1 on every simple root (simply laced), so its
  // simple-root coefficients solve G c = (1,...,1)
  std::vector<Rat> ones(24, Rat(1));
  std::vector<Rat> rho_coeff = solve(gq, ones);
  std::vector<Rat> x = solve(basis.transpose(), rho_coeff);
  std::vector<Int> weyl(24);
  for (std::size_t i = 0; i < 24; ++i) {
    if (!is_integer(x[i]))
      throw std::logic_error("Weyl vector is not a lattice point");
    weyl[i] = x[i].get_num();
  }

  NiemeierLattice out{std::move(nn), h, std::move(lat), std::move(basis),
                      std::move(gq), std::move(weyl)};
  if (out.weyl_norm() != 2 * h * (h + 1))
    throw std::logic_error("Weyl vector norm is not 2h(h+1)");
  return out;
}

Int niemeier_root_count(const NiemeierLattice& n) {
  return vector_count(n.lattice, 2);
}

HoleConstruction hole_construction(const std::string& name) {
  HoleConstruction hc{build_niemeier(name), GramLattice(), {}, GramLattice(),
                      false};
  hc.lorentzian = direct_sum(hc.niemeier.lattice, hyperbolic_plane());
  hc.rho.assign(26, Int(0));
  for (std::size_t i = 0; i < 24; ++i) hc.rho[i] = hc.niemeier.weyl[i];
  long h = hc.niemeier.coxeter;
  hc.rho[24] = h;
  hc.rho[25] = h + 1;  // ⟨ρ,ρ⟩ = 2h(h+1) - 2·h·(h+1) = 0
  hc.quotient = quotient_by_isotropic(hc.lorentzian, hc.rho);
  hc.certified = is_leech(hc.quotient);
  return hc;
}

}  // namespace lal
