#include "lal/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lal {

GramLattice::GramLattice(MatQ g) : rank(g.rows()), gram(std::move(g)) {
  if (gram.rows() != gram.cols())
    throw std::domain_error("gram matrix must be square");
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i + 1; j < rank; ++j)
      if (gram(i, j) != gram(j, i))
        throw std::domain_error("gram matrix must be symmetric");
}

bool GramLattice::is_integral() const {
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j)
      if (!is_integer(gram(i, j))) return false;
  return true;
}

bool GramLattice::is_even() const {
  if (!is_integral()) return false;
  for (std::size_t i = 0; i < rank; ++i)
    if (gram(i, i).get_num() % 2 != 0) return false;
  return true;
}

Rat GramLattice::determinant() const {
  if (is_integral()) {
    MatI g(rank, rank);
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j) g(i, j) = gram(i, j).get_num();
    return Rat(det_bareiss(g));
  }
  return det_rational(gram);
}

bool GramLattice::is_unimodular() const {
  if (!is_integral()) return false;
  Rat d = determinant();
  return d == 1 || d == -1;
}

GramLattice::Signature GramLattice::signature() const {
  // symmetric congruence reduction; hyperbolic pivots handled by a row+col add
  MatQ a = gram;
  const std::size_t n = rank;
  Signature s{0, 0, 0};
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    // find a usable pivot
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && a(i, i) != 0) {
        p = i;
        break;
      }
    if (p == n) {
      // all remaining diagonals vanish; look for an off-diagonal entry
      std::size_t bi = n, bj = n;
      for (std::size_t i = 0; i < n && bi == n; ++i)
        if (!done[i])
          for (std::size_t j = i + 1; j < n; ++j)
            if (!done[j] && a(i, j) != 0) {
              bi = i;
              bj = j;
              break;
            }
      if (bi == n) {
        for (std::size_t i = 0; i < n; ++i)
          if (!done[i]) ++s.zero;
        return s;
      }
      // v_i := v_i + v_j makes the diagonal entry 2 a(i,j) != 0
      for (std::size_t k = 0; k < n; ++k) a(bi, k) += a(bj, k);
      for (std::size_t k = 0; k < n; ++k) a(k, bi) += a(k, bj);
      p = bi;
    }
    Rat piv = a(p, p);
    if (piv > 0)
      ++s.pos;
    else
      ++s.neg;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || i == p || a(i, p) == 0) continue;
      Rat f = a(i, p) / piv;
      for (std::size_t k = 0; k < n; ++k) a(i, k) -= f * a(p, k);
      for (std::size_t k = 0; k < n; ++k) a(k, i) -= f * a(k, p);
    }
    done[p] = true;
  }
  return s;
}

GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
  MatQ g(a.rank + b.rank, a.rank + b.rank);
  for (std::size_t i = 0; i < a.rank; ++i)
    for (std::size_t j = 0; j < a.rank; ++j) g(i, j) = a.gram(i, j);
  for (std::size_t i = 0; i < b.rank; ++i)
    for (std::size_t j = 0; j < b.rank; ++j)
      g(a.rank + i, a.rank + j) = b.gram(i, j);
  return GramLattice(g);
}

GramLattice hyperbolic_plane() {
  MatQ g(2, 2);
  g(0, 1) = -1;
  g(1, 0) = -1;
  return GramLattice(g);
}

Int DiscriminantGroup::order() const {
  Int o = 1;
  for (const auto& d : invariant_factors) o *= d;
  return o;
}

DiscriminantGroup discriminant_group(const GramLattice& l) {
  if (!l.is_integral())
    throw std::domain_error("discriminant group requires an integral lattice");
  if (l.determinant() == 0) throw std::domain_error("gram matrix is singular");
  MatI g(l.rank, l.rank);
  for (std::size_t i = 0; i < l.rank; ++i)
    for (std::size_t j = 0; j < l.rank; ++j) g(i, j) = l.gram(i, j).get_num();
  DiscriminantGroup dg;
  for (const auto& d : smith_invariants(g))
    if (d != 1) dg.invariant_factors.push_back(d);
  return dg;
}

namespace {

MatI int_inverse(const MatI& u) {
  MatQ inv = inverse(to_rational(u));
  MatI r(u.rows(), u.cols());
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) {
      if (!is_integer(inv(i, j)))
        throw std::logic_error("matrix is not unimodular");
      r(i, j) = inv(i, j).get_num();
    }
  return r;
}

}  // namespace

GramLattice quotient_by_isotropic(const GramLattice& m, const std::vector<Int>& rho) {
  const std::size_t n = m.rank;
  if (rho.size() != n) throw std::domain_error("rho has wrong dimension");
  if (!m.is_even()) throw std::domain_error("lattice must be even");
  auto sig = m.signature();
  if (sig.neg != 1 || sig.zero != 0)
    throw std::domain_error("lattice must be Lorentzian of signature (n,1)");

  Int g = 0;
  for (const auto& c : rho) g = gcd(g, c);
  if (g == 0) throw std::domain_error("rho must be nonzero");
  if (g != 1) throw std::domain_error("rho must be primitive");

  // w = G·rho; isotropy is rho·w = 0
  std::vector<Int> w(n, Int(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w[i] += m.gram(i, j).get_num() * rho[j];
  Int norm = 0;
  for (std::size_t i = 0; i < n; ++i) norm += rho[i] * w[i];
  if (norm != 0) throw std::domain_error("rho is not isotropic");

  // integer kernel of v ↦ ⟨v,rho⟩, as rows
  MatI wcol(n, 1);
  for (std::size_t i = 0; i < n; ++i) wcol(i, 0) = w[i];
  MatI basis = left_kernel(wcol);
  const std::size_t kn = basis.rows();
  assert(kn == n - 1);

  // coordinates of rho in the kernel basis: solve x·basis = rho through the
  // invertible normal matrix basis·basisᵀ (basis has full row rank)
  MatQ bbt(kn, kn);
  for (std::size_t i = 0; i < kn; ++i)
    for (std::size_t j = 0; j < kn; ++j) {
      Rat s = 0;
      for (std::size_t k = 0; k < n; ++k) s += Rat(basis(i, k) * basis(j, k));
      bbt(i, j) = s;
    }
  std::vector<Rat> rhs(kn);
  for (std::size_t i = 0; i < kn; ++i) {
    Rat s = 0;
    for (std::size_t k = 0; k < n; ++k) s += Rat(basis(i, k) * rho[k]);
    rhs[i] = s;
  }
  std::vector<Rat> xq = solve(bbt, rhs);
  std::vector<Int> x(kn);
  for (std::size_t i = 0; i < kn; ++i) {
    if (!is_integer(xq[i]))
      throw std::logic_error("rho is not integral over the kernel basis");
    x[i] = xq[i].get_num();
  }

  // unimodular change of basis with first row x
  MatI xcol(kn, 1);
  for (std::size_t i = 0; i < kn; ++i) xcol(i, 0) = x[i];
  HnfResult hr = hnf(xcol);
  if (hr.h(0, 0) != 1)
    throw std::logic_error("rho is not primitive in its orthogonal complement");
  MatI change = int_inverse(hr.u).transpose();  // first row = x

  // quotient basis: remaining rows mapped through the kernel basis
  MatI qb(kn - 1, n);
  for (std::size_t i = 1; i < kn; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Int s = 0;
      for (std::size_t j = 0; j < kn; ++j) s += change(i, j) * basis(j, k);
      qb(i - 1, k) = s;
    }

  MatQ qgram(kn - 1, kn - 1);
  for (std::size_t i = 0; i + 1 < kn; ++i)
    for (std::size_t j = 0; j + 1 < kn; ++j) {
      Rat s = 0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          s += Rat(qb(i, a)) * m.gram(a, b) * Rat(qb(j, b));
      qgram(i, j) = s;
    }
  return GramLattice(qgram);
}

namespace {

Int round_rat(const Rat& r) { return floor_rat(r + Rat(1, 2)); }

// Exact LLL (δ = 3/4) on a Gram matrix; u holds the row transform applied.
struct GramLLL {
  MatQ gram;
  MatI u;
};

GramLLL lll_gram(const MatQ& g) {
  const std::size_t n = g.rows();
  GramLLL out{g, MatI::identity(n)};
  if (n < 2) return out;
  MatQ& G = out.gram;

  std::vector<Rat> B(n);
  std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n, Rat(0)));
  auto gso = [&](std::size_t i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rat v = G(i, j);
      for (std::size_t k = 0; k < j; ++k) v -= mu[j][k] * mu[i][k] * B[k];
      mu[i][j] = v / B[j];
    }
    B[i] = G(i, i);
    for (std::size_t k = 0; k < i; ++k) B[i] -= mu[i][k] * mu[i][k] * B[k];
    if (B[i] <= 0) throw std::domain_error("lattice is not positive definite");
  };
  for (std::size_t i = 0; i < n; ++i) gso(i);

  auto reduce = [&](std::size_t k, std::size_t j) {
    Int q = round_rat(mu[k][j]);
    if (q == 0) return;
    Rat qq(q);
    for (std::size_t c = 0; c < n; ++c) G(k, c) -= qq * G(j, c);
    for (std::size_t c = 0; c < n; ++c) G(c, k) -= qq * G(c, j);
    for (std::size_t c = 0; c < n; ++c) out.u(k, c) -= q * out.u(j, c);
    for (std::size_t c = 0; c < j; ++c) mu[k][c] -= qq * mu[j][c];
    mu[k][j] -= qq;
  };

  const Rat delta(3, 4);
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t j = k; j-- > 0;) reduce(k, j);
    if (B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
      ++k;
      continue;
    }
    // swap rows k-1 and k of the basis
    G.swap_rows(k - 1, k);
    for (std::size_t c = 0; c < n; ++c) std::swap(G(c, k - 1), G(c, k));
    out.u.swap_rows(k - 1, k);
    Rat m = mu[k][k - 1];
    Rat Bk = B[k] + m * m * B[k - 1];
    mu[k][k - 1] = m * B[k - 1] / Bk;
    B[k] = B[k - 1] * B[k] / Bk;
    B[k - 1] = Bk;
    for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu[k - 1][j], mu[k][j]);
    for (std::size_t i = k + 1; i < n; ++i) {
      Rat t = mu[i][k];
      mu[i][k] = mu[i][k - 1] - m * t;
      mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k];
    }
    k = k > 1 ? k - 1 : 1;
  }
  return out;
}

struct Cholesky {
  std::size_t n;
  std::vector<Rat> d;          // positive pivots
  std::vector<std::vector<Rat>> r;  // unit upper triangular coefficients
};

Cholesky cholesky(const GramLattice& l) {
  const std::size_t n = l.rank;
  Cholesky c;
  c.n = n;
  c.d.assign(n, Rat(0));
  c.r.assign(n, std::vector<Rat>(n, Rat(0)));
  MatQ a = l.gram;
  for (std::size_t i = 0; i < n; ++i) {
    Rat di = a(i, i);
    for (std::size_t k = 0; k < i; ++k)
      di -= c.d[k] * c.r[k][i] * c.r[k][i];
    if (di <= 0) throw std::domain_error("lattice is not positive definite");
    c.d[i] = di;
    for (std::size_t j = i + 1; j < n; ++j) {
      Rat v = a(i, j);
      for (std::size_t k = 0; k < i; ++k)
        v -= c.d[k] * c.r[k][i] * c.r[k][j];
      c.r[i][j] = v / di;
    }
  }
  return c;
}

// integer range for d·(x+c)² ≤ t; exact predicate with a floating seed
std::pair<long, long> pivot_range(const Rat& d, const Rat& c, const Rat& t) {
  if (t < 0) return {1, 0};
  double q = t.get_d() / d.get_d();
  double root = q > 0 ? std::sqrt(q) : 0.0;
  double center = -c.get_d();
  auto ok = [&](long x) {
    Rat s = Rat(x) + c;
    return d * s * s <= t;
  };
  long hi = static_cast<long>(std::floor(center + root));
  while (ok(hi + 1)) ++hi;
  while (hi > static_cast<long>(std::floor(center)) && !ok(hi)) --hi;
  long lo = static_cast<long>(std::ceil(center - root));
  while (ok(lo - 1)) --lo;
  while (lo < hi + 1 && !ok(lo)) ++lo;
  if (!ok(lo)) return {1, 0};
  return {lo, hi};
}

}  // namespace

ShortVectors short_vectors(const GramLattice& l, const Rat& bound) {
  GramLLL red = lll_gram(l.gram);
  GramLattice reduced(red.gram);
  Cholesky c = cholesky(reduced);  // throws if not positive definite
  const std::size_t n = l.rank;
  ShortVectors out;
  out.count = 0;
  if (n == 0 || bound <= 0) return out;

  std::vector<long> x(n, 0);
  // enumerate from the last coordinate down; fix the sign by requiring the
  // trailing nonzero coordinate to be positive
  auto rec = [&](auto&& self, std::size_t level, const Rat& remaining,
                 bool tail_zero) -> void {
    std::size_t i = level - 1;
    Rat center = 0;
    for (std::size_t j = level; j < n; ++j)
      if (x[j] != 0) center += c.r[i][j] * Rat(x[j]);
    auto [lo, hi] = pivot_range(c.d[i], center, remaining);
    if (tail_zero && lo < 0) lo = 0;
    for (long v = lo; v <= hi; ++v) {
      x[i] = v;
      Rat s = Rat(v) + center;
      Rat used = c.d[i] * s * s;
      bool now_zero = tail_zero && v == 0;
      if (i == 0) {
        if (!now_zero) {
          // Q(x) = Σ d_k (x_k + c_k)²; everything above this level is in
          // `bound - remaining`, this level contributes `used`
          Rat norm = bound - remaining + used;
          if (norm > 0 && norm <= bound) {
            // back to the original basis through the reduction transform
            std::vector<Int> vec(n, Int(0));
            for (std::size_t j = 0; j < n; ++j) {
              if (x[j] == 0) continue;
              for (std::size_t k = 0; k < n; ++k)
                vec[k] += Int(x[j]) * red.u(j, k);
            }
            out.reps.emplace_back(std::move(vec), norm);
            out.count += 2;
          }
        }
      } else {
        self(self, i, remaining - used, now_zero);
      }
    }
    x[i] = 0;
  };
  rec(rec, n, bound, true);
  return out;
}

Int vector_count(const GramLattice& l, const Rat& norm) {
  ShortVectors sv = short_vectors(l, norm);
  Int count = 0;
  for (const auto& [v, nm] : sv.reps)
    if (nm == norm) count += 2;
  return count;
}

bool is_leech(const GramLattice& l) {
  if (l.rank != 24) throw std::domain_error("is_leech requires rank 24");
  if (!l.positive_definite())
    throw std::domain_error("is_leech requires a positive definite lattice");
  if (!l.is_even()) return false;
  if (l.determinant() != 1) return false;
  return short_vectors(l, 2).count == 0;
}

void write_lattice(std::ostream& os, const GramLattice& l) {
  os << "rank " << l.rank << "\n";
  os << "gram\n";
  for (std::size_t i = 0; i < l.rank; ++i) {
    for (std::size_t j = 0; j < l.rank; ++j) {
      if (j) os << " ";
      os << rat_str(l.gram(i, j));
    }
    os << "\n";
  }
}

GramLattice read_lattice(std::istream& is) {
  std::string kw;
  std::size_t n;
  if (!(is >> kw) || kw != "rank" || !(is >> n))
    throw std::runtime_error("lattice file: expected 'rank <n>'");
  if (!(is >> kw) || kw != "gram")
    throw std::runtime_error("lattice file: expected 'gram'");
  MatQ g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::string tok;
      if (!(is >> tok)) throw std::runtime_error("lattice file: truncated gram");
      g(i, j) = parse_rat(tok);
    }
  return GramLattice(g);
}

std::string lattice_to_string(const GramLattice& l) {
  std::ostringstream os;
  write_lattice(os, l);
  return os.str();
}

GramLattice lattice_from_string(const std::string& s) {
  std::istringstream is(s);
  return read_lattice(is);
}

}  // namespace lal
