#include "lal/lie.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <queue>
#include <set>
#include <stdexcept>

namespace lal {

SimpleLieType::SimpleLieType(Family f, int r) : family(f), rank(r) {
  bool ok = false;
  switch (f) {
    case Family::A: ok = r >= 1; break;
    case Family::B: ok = r >= 2; break;
    case Family::C: ok = r >= 2; break;
    case Family::D: ok = r >= 3; break;
    case Family::E: ok = r == 6 || r == 7 || r == 8; break;
    case Family::F: ok = r == 4; break;
    case Family::G: ok = r == 2; break;
  }
  if (!ok || r > 24)
    throw std::domain_error("invalid simple type " +
                            std::string(1, static_cast<char>(f)) +
                            std::to_string(r));
}

std::string SimpleLieType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

SimpleLieType SimpleLieType::parse(const std::string& s) {
  if (s.size() < 2) throw std::domain_error("bad type name: " + s);
  char f = s[0];
  int r = 0;
  try {
    r = std::stoi(s.substr(1));
  } catch (...) {
    throw std::domain_error("bad type name: " + s);
  }
  switch (f) {
    case 'A': case 'B': case 'C': case 'D': case 'E': case 'F': case 'G':
      return SimpleLieType(static_cast<Family>(f), r);
    default:
      throw std::domain_error("bad type name: " + s);
  }
}

AlgebraInfo algebra_info(SimpleLieType t) {
  const long n = t.rank;
  switch (t.family) {
    case Family::A: return {n * (n + 2), n, n + 1, n + 1, 1};
    case Family::B: return {n * (2 * n + 1), n, 2 * n, 2 * n - 1, 2};
    case Family::C: return {n * (2 * n + 1), n, 2 * n, n + 1, 2};
    case Family::D: return {n * (2 * n - 1), n, 2 * n - 2, 2 * n - 2, 1};
    case Family::E:
      if (n == 6) return {78, 6, 12, 12, 1};
      if (n == 7) return {133, 7, 18, 18, 1};
      return {248, 8, 30, 30, 1};
    case Family::F: return {52, 4, 12, 9, 2};
    case Family::G: return {14, 2, 6, 4, 3};
  }
  throw std::domain_error("unreachable");
}

Rat dot(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

Vec unit(std::size_t dim, std::size_t i, Rat v = 1) {
  Vec e(dim, Rat(0));
  e[i] = v;
  return e;
}

// simple roots + form scale in the standard orthonormal models
std::pair<std::vector<Vec>, Rat> simple_root_model(SimpleLieType t) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  std::vector<Vec> s;
  Rat fs = 1;
  switch (t.family) {
    case Family::A: {
      for (std::size_t i = 0; i < n; ++i) {
        Vec v(n + 1, Rat(0));
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      break;
    }
    case Family::B: {
      for (std::size_t i = 0; i + 1 < n; ++i) {
        Vec v(n, Rat(0));
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      s.push_back(unit(n, n - 1));
      break;
    }
    case Family::C: {
      for (std::size_t i = 0; i + 1 < n; ++i) {
        Vec v(n, Rat(0));
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      s.push_back(unit(n, n - 1, 2));
      fs = Rat(1, 2);  // long roots ±2e_i get norm 2
      break;
    }
    case Family::D: {
      for (std::size_t i = 0; i + 1 < n; ++i) {
        Vec v(n, Rat(0));
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      Vec v(n, Rat(0));
      v[n - 2] = 1;
      v[n - 1] = 1;
      s.push_back(v);
      break;
    }
    case Family::E: {
      // Bourbaki numbering inside R^8
      Vec a1(8, Rat(-1, 2));
      a1[0] = Rat(1, 2);
      a1[7] = Rat(1, 2);
      Vec a2(8, Rat(0));
      a2[0] = 1;
      a2[1] = 1;
      s.push_back(a1);
      s.push_back(a2);
      for (std::size_t i = 0; i + 2 < n; ++i) {
        Vec v(8, Rat(0));
        v[i] = -1;
        v[i + 1] = 1;
        s.push_back(v);
      }
      break;
    }
    case Family::F: {
      Vec a1(4, Rat(0)), a2(4, Rat(0)), a3(4, Rat(0));
      a1[1] = 1;
      a1[2] = -1;
      a2[2] = 1;
      a2[3] = -1;
      a3[3] = 1;
      Vec a4(4, Rat(-1, 2));
      a4[0] = Rat(1, 2);
      s.push_back(a1);
      s.push_back(a2);
      s.push_back(a3);
      s.push_back(a4);
      break;
    }
    case Family::G: {
      Vec a1(3, Rat(0)), a2(3, Rat(0));
      a1[0] = 1;
      a1[1] = -1;
      a2[0] = -2;
      a2[1] = 1;
      a2[2] = 1;
      s.push_back(a1);
      s.push_back(a2);
      fs = Rat(1, 3);  // long roots have euclidean norm 6
      break;
    }
  }
  return {s, fs};
}

Vec reflect(const Vec& v, const Vec& alpha) {
  Rat c = 2 * dot(v, alpha) / dot(alpha, alpha);
  Vec r = v;
  for (std::size_t i = 0; i < v.size(); ++i) r[i] -= c * alpha[i];
  return r;
}

RootSystem build(SimpleLieType t) {
  RootSystem rs(t);
  auto [simple, fs] = simple_root_model(t);
  rs.simple_roots = simple;
  rs.form_scale = fs;
  rs.ambient = simple[0].size();
  const std::size_t n = simple.size();

  // all model coordinates are half-integers, so the closure runs over
  // integer vectors scaled by 2; reflection coefficients are Cartan integers
  using IVec = std::vector<long>;
  auto idot = [](const IVec& a, const IVec& b) {
    long s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
  };
  std::vector<IVec> isimple(n, IVec(rs.ambient));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < rs.ambient; ++k) {
      Rat x = 2 * simple[i][k];
      assert(is_integer(x));
      isimple[i][k] = to_long(x.get_num());
    }
  std::vector<long> inorm(n);
  for (std::size_t i = 0; i < n; ++i) inorm[i] = idot(isimple[i], isimple[i]);

  // reflection closure, tracking expansion coefficients over the simple roots
  std::map<IVec, IVec> seen;  // root -> coefficients
  std::queue<IVec> work;
  for (std::size_t i = 0; i < n; ++i) {
    IVec c(n, 0);
    c[i] = 1;
    seen.emplace(isimple[i], c);
    work.push(isimple[i]);
  }
  while (!work.empty()) {
    IVec v = work.front();
    work.pop();
    IVec cv = seen.at(v);
    for (std::size_t i = 0; i < n; ++i) {
      long num = 2 * idot(v, isimple[i]);
      assert(num % inorm[i] == 0);
      long m = num / inorm[i];
      if (m == 0) continue;
      IVec w = v;
      for (std::size_t k = 0; k < rs.ambient; ++k) w[k] -= m * isimple[i][k];
      IVec cw = cv;
      cw[i] -= m;
      if (seen.emplace(w, cw).second) work.push(w);
    }
    IVec neg = v, cneg = cv;
    for (auto& x : neg) x = -x;
    for (auto& x : cneg) x = -x;
    if (seen.emplace(neg, cneg).second) work.push(neg);
  }

  auto to_vec = [&](const IVec& v) {
    Vec out(rs.ambient);
    for (std::size_t k = 0; k < rs.ambient; ++k) out[k] = frac(v[k], 2);
    return out;
  };

  std::vector<std::pair<long, IVec>> pos;  // (height, root)
  const IVec* top_coeffs = nullptr;
  long top_height = -1;
  for (const auto& [v, c] : seen) {
    bool is_pos = true;
    long height = 0;
    for (long ci : c) {
      if (ci < 0) is_pos = false;
      height += ci;
    }
    if (!is_pos) continue;
    pos.emplace_back(height, v);
    if (height > top_height) {
      top_height = height;
      top_coeffs = &seen.find(v)->second;
    }
  }
  std::sort(pos.begin(), pos.end());
  for (const auto& [h, v] : pos) rs.positive_roots.push_back(to_vec(v));
  rs.roots = rs.positive_roots;
  for (const auto& v : rs.positive_roots) {
    Vec neg = v;
    for (auto& x : neg) x = -x;
    rs.roots.push_back(neg);
  }

  rs.highest_root = rs.positive_roots.back();
  for (long c : *top_coeffs) rs.marks.push_back(c);

  // fundamental weights: (ϖ_i | α_j∨) = δ_ij, solved inside the root span
  MatQ pairing(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      pairing(i, j) = 2 * dot(simple[i], simple[j]) / dot(simple[j], simple[j]);
  MatQ pinv = inverse(pairing);
  rs.weyl_vector = Vec(rs.ambient, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    Vec w(rs.ambient, Rat(0));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < rs.ambient; ++k)
        w[k] += pinv(i, j) * simple[j][k];
    rs.fundamental_weights.push_back(w);
    for (std::size_t k = 0; k < rs.ambient; ++k)
      rs.weyl_vector[k] += w[k];
  }
  return rs;
}

}  // namespace

const RootSystem& root_system(SimpleLieType t) {
  static std::map<SimpleLieType, RootSystem> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t);
  if (it == cache.end()) it = cache.emplace(t, build(t)).first;
  return it->second;
}

Vec RootSystem::weight_from_labels(const std::vector<long>& labels) const {
  assert(labels.size() == fundamental_weights.size());
  Vec w(ambient, Rat(0));
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t k = 0; k < ambient; ++k)
      w[k] += Rat(labels[i]) * fundamental_weights[i][k];
  return w;
}

std::vector<long> RootSystem::labels_of(const Vec& w) const {
  std::vector<long> labels;
  for (const auto& a : simple_roots) {
    Rat c = coroot_pairing(w, a);
    if (!is_integer(c)) throw std::domain_error("weight is not integral");
    labels.push_back(to_long(c.get_num()));
  }
  return labels;
}

Rat weyl_vector_norm(SimpleLieType t) {
  const RootSystem& rs = root_system(t);
  Rat explicit_norm = rs.ip(rs.weyl_vector, rs.weyl_vector);
  AlgebraInfo info = algebra_info(t);
  Rat closed(info.dual_coxeter * info.dim, 12);
  closed.canonicalize();
  if (explicit_norm != closed)
    throw std::logic_error("strange formula violated for " + t.name());
  return explicit_norm;
}

LevelledAlgebra::LevelledAlgebra(SimpleLieType t, long k) : type(t), level(k) {
  if (k < 1) throw std::domain_error("level must be positive");
}

std::vector<std::vector<long>> integrable_weights(const LevelledAlgebra& a) {
  const RootSystem& rs = root_system(a.type);
  const std::size_t n = rs.simple_roots.size();
  // comarks: ⟨ϖ_i, θ∨⟩
  std::vector<long> comark(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rat c = rs.coroot_pairing(rs.fundamental_weights[i], rs.highest_root);
    comark[i] = to_long(c.get_num());
  }
  std::vector<std::vector<long>> out;
  std::vector<long> cur(n, 0);
  // lexicographic enumeration of Σ λ_i·comark_i ≤ k
  auto rec = [&](auto&& self, std::size_t i, long budget) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (long v = 0; v * comark[i] <= budget; ++v) {
      cur[i] = v;
      self(self, i + 1, budget - v * comark[i]);
    }
    cur[i] = 0;
  };
  rec(rec, 0, a.level);
  return out;
}

namespace {

// dominant representative of a weight under the Weyl group
Vec dominant_rep(const RootSystem& rs, Vec v) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (const auto& a : rs.simple_roots) {
      if (rs.coroot_pairing(v, a) < 0) {
        v = reflect(v, a);
        moved = true;
      }
    }
  }
  return v;
}

// is λ - v a nonnegative integer combination of simple roots?
bool below_in_root_lattice(const RootSystem& rs, const Vec& lambda, const Vec& v) {
  const std::size_t n = rs.simple_roots.size();
  Vec diff(lambda.size());
  for (std::size_t k = 0; k < lambda.size(); ++k) diff[k] = lambda[k] - v[k];
  // solve over the simple-root span
  MatQ gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      gram(i, j) = dot(rs.simple_roots[i], rs.simple_roots[j]);
  std::vector<Rat> rhs(n);
  for (std::size_t j = 0; j < n; ++j) rhs[j] = dot(diff, rs.simple_roots[j]);
  std::vector<Rat> c = solve(gram, rhs);
  for (const auto& ci : c)
    if (!is_integer(ci) || ci < 0) return false;
  return true;
}

}  // namespace

Int weyl_dim(SimpleLieType t, const std::vector<long>& labels) {
  const RootSystem& rs = root_system(t);
  Vec lambda = rs.weight_from_labels(labels);
  Vec lr(rs.ambient);
  for (std::size_t k = 0; k < rs.ambient; ++k)
    lr[k] = lambda[k] + rs.weyl_vector[k];
  Rat prod = 1;
  for (const auto& a : rs.positive_roots)
    prod *= rs.ip(lr, a) / rs.ip(rs.weyl_vector, a);
  prod.canonicalize();
  assert(is_integer(prod));
  return prod.get_num();
}

WeightMultiset weight_system(SimpleLieType t, const std::vector<long>& labels) {
  const RootSystem& rs = root_system(t);
  for (long l : labels)
    if (l < 0) throw std::domain_error("weight is not dominant");
  Vec lambda = rs.weight_from_labels(labels);

  // all weights of V(λ): BFS from λ along simple-root subtractions; ν is a
  // weight iff its dominant representative μ satisfies λ - μ ∈ Q+
  std::set<Vec> weights{lambda};
  std::queue<Vec> work;
  work.push(lambda);
  while (!work.empty()) {
    Vec v = work.front();
    work.pop();
    for (const auto& a : rs.simple_roots) {
      Vec w = v;
      for (std::size_t k = 0; k < w.size(); ++k) w[k] -= a[k];
      if (weights.count(w)) continue;
      if (below_in_root_lattice(rs, lambda, dominant_rep(rs, w))) {
        weights.insert(w);
        work.push(w);
      }
    }
  }

  // dominant weights, sorted by decreasing (μ+ρ|μ+ρ) so Freudenthal only
  // looks upward at already-known multiplicities
  std::vector<Vec> dominant;
  for (const auto& v : weights) {
    bool dom = true;
    for (const auto& a : rs.simple_roots)
      if (rs.coroot_pairing(v, a) < 0) {
        dom = false;
        break;
      }
    if (dom) dominant.push_back(v);
  }
  auto shifted_norm = [&](const Vec& v) {
    Vec s(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) s[k] = v[k] + rs.weyl_vector[k];
    return rs.ip(s, s);
  };
  std::stable_sort(dominant.begin(), dominant.end(),
                   [&](const Vec& a, const Vec& b) {
                     return shifted_norm(a) > shifted_norm(b);
                   });

  std::map<Vec, Int> mult;
  Rat lam_norm = shifted_norm(lambda);
  for (const auto& mu : dominant) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    // Freudenthal: ((λ+ρ)² - (μ+ρ)²) m_μ = 2 Σ_{α>0} Σ_{j≥1} m_{μ+jα} (μ+jα|α)
    Rat num = 0;
    for (const auto& a : rs.positive_roots) {
      Vec v = mu;
      while (true) {
        for (std::size_t k = 0; k < v.size(); ++k) v[k] += a[k];
        if (!weights.count(v)) break;
        Vec rep = dominant_rep(rs, v);
        auto it = mult.find(rep);
        assert(it != mult.end());
        num += 2 * Rat(it->second) * rs.ip(v, a);
      }
    }
    Rat den = lam_norm - shifted_norm(mu);
    Rat m = num / den;
    m.canonicalize();
    assert(is_integer(m) && m >= 0);
    mult[mu] = m.get_num();
  }

  WeightMultiset out;
  out.total = 0;
  for (const auto& v : weights) {
    Int m = mult.at(dominant_rep(rs, v));
    out.entries.emplace_back(v, m);
    out.total += m;
  }
  return out;
}

Rat max_rho_pairing(SimpleLieType t, const std::vector<long>& labels) {
  const RootSystem& rs = root_system(t);
  WeightMultiset ws = weight_system(t, labels);
  Rat best = rs.ip(ws.entries.front().first, rs.weyl_vector);
  for (const auto& [v, m] : ws.entries) {
    Rat p = rs.ip(v, rs.weyl_vector);
    if (p > best) best = p;
  }
  return best;
}

}  // namespace lal
