#include "tiltlab/linalg.hpp"

#include <string>
#include <utility>

#include "tiltlab/error.hpp"

namespace tiltlab {

RowEchelon rref(RatMatrix m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    while (p < R && m(p, c) == 0) ++p;
    if (p == R) continue;
    if (p != r)
      for (std::size_t j = 0; j < C; ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < C; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < C; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  RowEchelon out;
  out.reduced = m.block(0, 0, r, C);
  out.pivots = std::move(pivots);
  return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

namespace {

// Fraction-free forward elimination; returns rank and the sign-corrected
// last pivot (the determinant when the matrix is square and nonsingular).
std::size_t bareiss(IntMatrix& a, Integer* det) {
  const std::size_t R = a.rows(), C = a.cols();
  Integer prev = 1;
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    while (p < R && a(p, c) == 0) ++p;
    if (p == R) continue;
    if (p != r) {
      for (std::size_t j = 0; j < C; ++j) std::swap(a(p, j), a(r, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < R; ++i) {
      for (std::size_t j = c + 1; j < C; ++j) {
        Integer v = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  if (det) *det = (R == C && r == R) ? (sign > 0 ? prev : Integer(-prev)) : Integer(0);
  return r;
}

}  // namespace

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  return bareiss(a, nullptr);
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw ComputationError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  IntMatrix a = m;
  Integer d;
  bareiss(a, &d);
  return d;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw ComputationError("inverse of a non-square matrix");
  // Fraction-free Gauss-Jordan on [m | I]: ends with det*I on the left and
  // det * m^{-1} on the right.
  IntMatrix a(n, 2 * n);
  a.set_block(0, 0, m);
  for (std::size_t i = 0; i < n; ++i) a(i, n + i) = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw ComputationError("matrix is singular");
    if (p != k)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a(p, j), a(k, j));
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        Integer v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  // Rows other than the last pivot row lag one step behind; each diagonal
  // entry now equals the determinant of the (row-permuted) matrix.
  const Integer det = a(n - 1, n - 1);
  if (det != 1 && det != -1)
    throw ComputationError("matrix is not unimodular (determinant " + det.get_str() + ")");
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i) != det) throw ComputationError("internal error in fraction-free inverse");
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = a(i, n + j) * det;  // det = +-1
  }
  return inv;
}

RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw ComputationError("inverse of a non-square matrix");
  RatMatrix a(n, 2 * n);
  a.set_block(0, 0, m);
  for (std::size_t i = 0; i < n; ++i) a(i, n + i) = 1;
  RowEchelon e = rref(a);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) throw ComputationError("matrix is singular");
  return e.reduced.block(0, n, n, n);
}

RatMatrix kernel_matrix(const RatMatrix& m, std::vector<std::size_t>* free_columns) {
  RowEchelon e = rref(m);
  const std::size_t C = m.cols();
  std::vector<bool> is_pivot(C, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> frees;
  for (std::size_t c = 0; c < C; ++c)
    if (!is_pivot[c]) frees.push_back(c);
  RatMatrix k(C, frees.size());
  for (std::size_t t = 0; t < frees.size(); ++t) {
    k(frees[t], t) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) k(e.pivots[i], t) = -e.reduced(i, frees[t]);
  }
  if (free_columns) *free_columns = std::move(frees);
  return k;
}

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m) {
  RatMatrix k = kernel_matrix(m);
  std::vector<std::vector<Rational>> out;
  for (std::size_t t = 0; t < k.cols(); ++t) out.push_back(k.col(t));
  return out;
}

bool solve(const RatMatrix& a, const RatMatrix& b, RatMatrix& x) {
  const std::size_t R = a.rows(), C = a.cols(), K = b.cols();
  RatMatrix aug(R, C + K);
  aug.set_block(0, 0, a);
  aug.set_block(0, C, b);
  RowEchelon e = rref(aug);
  x = RatMatrix(C, K);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] >= C) return false;
    for (std::size_t j = 0; j < K; ++j) x(e.pivots[i], j) = e.reduced(i, C + j);
  }
  return true;
}

std::size_t matrix_order(const IntMatrix& m, std::size_t cap) {
  if (m.rows() != m.cols()) throw ComputationError("order of a non-square matrix");
  const IntMatrix id = IntMatrix::identity(m.rows());
  IntMatrix p = m;
  for (std::size_t d = 1; d <= cap; ++d) {
    if (p == id) return d;
    p = p * m;
  }
  throw ComputationError("matrix order exceeds cap " + std::to_string(cap));
}

IntMatrix matrix_power(const IntMatrix& m, long long e) {
  IntMatrix base = e < 0 ? inverse_unimodular(m) : m;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  IntMatrix result = IntMatrix::identity(m.rows());
  while (k) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw ComputationError("matrix entry " + m(i, j).get_str() + " is not integral");
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

RatMatrix vstack(const std::vector<RatMatrix>& parts, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& p : parts) rows += p.rows();
  RatMatrix out(rows, cols);
  std::size_t r = 0;
  for (const auto& p : parts) {
    out.set_block(r, 0, p);
    r += p.rows();
  }
  return out;
}

}  // namespace tiltlab
