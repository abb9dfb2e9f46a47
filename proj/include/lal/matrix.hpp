#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lal/rat.hpp"

namespace lal {

// Dense row-major matrix over an exact scalar (Int or Rat).
template <class T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t r, std::size_t c) : rows_(r), cols_(c), data_(r * c) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Mat operator*(const Mat& o) const {
    assert(cols_ == o.rows_);
    Mat p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
      }
    return p;
  }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_,
                          data_.begin() + (i + 1) * cols_);
  }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < cols_; ++k)
      std::swap((*this)(i, k), (*this)(j, k));
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

using MatI = Mat<Int>;
using MatQ = Mat<Rat>;

inline MatQ to_rational(const MatI& a) {
  MatQ q(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) q(i, j) = Rat(a(i, j));
  return q;
}

// Bareiss fraction-free determinant.
inline Int det_bareiss(MatI a) {
  const std::size_t n = a.rows();
  assert(n == a.cols());
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = num / prev;  // exact by Bareiss
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

inline Rat det_rational(MatQ a) {
  const std::size_t n = a.rows();
  assert(n == a.cols());
  Rat det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.swap_rows(k, p);
      det = -det;
    }
    det *= a(k, k);
    Rat inv = 1 / a(k, k);
    for (std::size_t j = k; j < n; ++j) a(k, j) *= inv;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat f = a(i, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

// Solves a x = b; throws if singular.
inline std::vector<Rat> solve(MatQ a, std::vector<Rat> b) {
  const std::size_t n = a.rows();
  assert(n == a.cols() && n == b.size());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw std::domain_error("singular linear system");
    if (p != k) {
      a.swap_rows(k, p);
      std::swap(b[k], b[p]);
    }
    Rat inv = 1 / a(k, k);
    for (std::size_t j = k; j < n; ++j) a(k, j) *= inv;
    b[k] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rat f = a(i, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      b[i] -= f * b[k];
    }
  }
  return b;
}

inline MatQ inverse(const MatQ& a) {
  const std::size_t n = a.rows();
  MatQ aug = a, inv = MatQ::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && aug(p, k) == 0) ++p;
    if (p == n) throw std::domain_error("matrix not invertible");
    if (p != k) {
      aug.swap_rows(k, p);
      inv.swap_rows(k, p);
    }
    Rat s = 1 / aug(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      aug(k, j) *= s;
      inv(k, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || aug(i, k) == 0) continue;
      Rat f = aug(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        aug(i, j) -= f * aug(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

// Row-style Hermite normal form: returns (H, U) with U unimodular, U*A = H,
// H echelon with positive pivots and reduced entries above them.
struct HnfResult {
  MatI h;
  MatI u;
  std::size_t rank = 0;
};

inline HnfResult hnf(const MatI& a) {
  const std::size_t m = a.rows(), n = a.cols();
  MatI h = a, u = MatI::identity(m);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    // clear below via extended gcd row ops
    for (std::size_t i = row + 1; i < m; ++i) {
      if (h(i, col) == 0) continue;
      Int g, p, q;
      mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(),
                 h(row, col).get_mpz_t(), h(i, col).get_mpz_t());
      Int r1 = h(row, col) / g, r2 = h(i, col) / g;
      for (std::size_t j = 0; j < n; ++j) {
        Int t = p * h(row, j) + q * h(i, j);
        h(i, j) = r1 * h(i, j) - r2 * h(row, j);
        h(row, j) = t;
      }
      for (std::size_t j = 0; j < m; ++j) {
        Int t = p * u(row, j) + q * u(i, j);
        u(i, j) = r1 * u(i, j) - r2 * u(row, j);
        u(row, j) = t;
      }
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      for (std::size_t j = 0; j < n; ++j) h(row, j) = -h(row, j);
      for (std::size_t j = 0; j < m; ++j) u(row, j) = -u(row, j);
    }
    // reduce entries above the pivot
    for (std::size_t i = 0; i < row; ++i) {
      Int f = floor_div(h(i, col), h(row, col));
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h(i, j) -= f * h(row, j);
      for (std::size_t j = 0; j < m; ++j) u(i, j) -= f * u(row, j);
    }
    ++row;
  }
  return {std::move(h), std::move(u), row};
}

// Basis of the integer kernel {x : x A = 0} as rows.
inline MatI left_kernel(const MatI& a) {
  HnfResult r = hnf(a);
  MatI k(a.rows() - r.rank, a.rows());
  for (std::size_t i = r.rank; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j)
      k(i - r.rank, j) = r.u(i, j);
  return k;
}

// Smith normal form invariant factors d1 | d2 | ... (nonzero ones).
// Minimal-pivot elimination keeps entries small.
inline std::vector<Int> smith_invariants(MatI a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<Int> inv;
  for (std::size_t t = 0; t < m && t < n; ++t) {
    for (;;) {
      // move a nonzero entry of minimal absolute value to the corner
      std::size_t pi = t, pj = t;
      bool found = false;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a(i, j) != 0 &&
              (!found || abs(a(i, j)) < abs(a(pi, pj)))) {
            pi = i;
            pj = j;
            found = true;
          }
      if (!found) {
        std::sort(inv.begin(), inv.end());
        return inv;
      }
      a.swap_rows(t, pi);
      for (std::size_t i = 0; i < m; ++i) std::swap(a(i, t), a(i, pj));

      bool reduced = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        Int q = a(i, t) / a(t, t);  // truncated division keeps |rem| < |pivot|
        if (q != 0)
          for (std::size_t j = t; j < n; ++j) a(i, j) -= q * a(t, j);
        if (a(i, t) != 0) reduced = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        Int q = a(t, j) / a(t, t);
        if (q != 0)
          for (std::size_t i = t; i < m; ++i) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) reduced = true;
      }
      if (reduced) continue;  // smaller remainders exist; pick a new pivot

      // divisibility fix-up: the pivot must divide the rest of the block
      bool fix = false;
      for (std::size_t i = t + 1; i < m && !fix; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            for (std::size_t jj = t; jj < n; ++jj) a(t, jj) += a(i, jj);
            fix = true;
            break;
          }
      if (!fix) break;
    }
    inv.push_back(abs(a(t, t)));
  }
  std::sort(inv.begin(), inv.end());
  return inv;
}

}  // namespace lal
