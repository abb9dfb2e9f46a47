#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lal {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// floor(a/b) for exact integers, b != 0
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int floor_rat(const Rat& r) {
  return floor_div(r.get_num(), r.get_den());
}

inline Int ceil_rat(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// mpq_class(p, q) does not reduce; this does
inline Rat frac(const Int& p, const Int& q) {
  Rat r(p, q);
  r.canonicalize();
  return r;
}

inline bool fits_long(const Int& v) { return v.fits_slong_p(); }

inline long to_long(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer too large");
  return v.get_si();
}

// "p/q" or plain integer; denominators are never printed as decimals
inline std::string rat_str(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rat parse_rat(const std::string& s) {
  Rat r(s);
  r.canonicalize();
  return r;
}

inline long euler_phi(long n) {
  long result = n, m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

// Moebius function
inline int moebius(long n) {
  int mu = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

inline std::vector<long> divisors(long n) {
  std::vector<long> lo, hi;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      lo.push_back(d);
      if (d != n / d) hi.push_back(n / d);
    }
  }
  for (auto it = hi.rbegin(); it != hi.rend(); ++it) lo.push_back(*it);
  return lo;
}

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

}  // namespace lal
