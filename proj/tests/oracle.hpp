#pragma once

// Reference computations used to cross-check the library. They work on plain
// integers and fractions and share no code with it.

#include <gmpxx.h>

#include <cstddef>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Vec = std::vector<long long>;
using Mat = std::vector<std::vector<long long>>;

inline Mat identity(std::size_t n) {
  Mat m(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Mat multiply(const Mat& a, const Mat& b) {
  Mat c(a.size(), Vec(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < c[i].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Mat transpose(const Mat& a) {
  Mat t(a.empty() ? 0 : a[0].size(), Vec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

inline Vec apply(const Mat& a, const Vec& x) {
  Vec y(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

inline Mat power(const Mat& a, unsigned e) {
  Mat r = identity(a.size());
  for (unsigned i = 0; i < e; ++i) r = multiply(r, a);
  return r;
}

// Gauss-Jordan over the rationals; the input must be unimodular.
inline Mat inverse(const Mat& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = mpq_class(static_cast<long>(a[i][j]));
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (m[p][c] == 0) ++p;
    std::swap(m[p], m[c]);
    mpq_class inv = 1 / m[c][c];
    for (auto& v : m[c]) v *= inv;
    for (std::size_t r = 0; r < n; ++r)
      if (r != c && m[r][c] != 0) {
        mpq_class f = m[r][c];
        for (std::size_t j = 0; j < 2 * n; ++j) m[r][j] -= f * m[c][j];
      }
  }
  Mat out(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = m[i][n + j].get_num().get_si();
  return out;
}

// Paths of every length from u to v in an acyclic quiver given as (source, target) pairs.
inline long long count_paths(std::size_t vertices, const std::vector<std::pair<int, int>>& arrows, int u, int v) {
  std::vector<long long> ways(vertices, 0);
  ways[u] = 1;
  // relax |Q_0| times; enough for an acyclic quiver
  std::vector<long long> total(vertices, 0);
  total[u] = 1;
  for (std::size_t step = 0; step < vertices; ++step) {
    std::vector<long long> next(vertices, 0);
    for (auto [s, t] : arrows) next[t] += ways[s];
    ways = next;
    for (std::size_t i = 0; i < vertices; ++i) total[i] += ways[i];
  }
  return total[v];
}

inline long long form(const Mat& e, const Vec& x, const Vec& y) {
  long long s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * e[i][j] * y[j];
  return s;
}

// Every nonzero x in [0, bound]^l with x^t E x = 1.
inline std::set<Vec> brute_force_roots(const Mat& e, long long bound) {
  const std::size_t l = e.size();
  std::set<Vec> out;
  Vec x(l, 0);
  while (true) {
    std::size_t i = 0;
    while (i < l && x[i] == bound) x[i++] = 0;
    if (i == l) break;
    ++x[i];
    if (form(e, x, x) == 1) out.insert(x);
  }
  return out;
}

// Positive roots of A_m: indicator vectors of the intervals of 1..m.
inline std::set<Vec> type_a_positive_roots(std::size_t m) {
  std::set<Vec> out;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      Vec x(m, 0);
      for (std::size_t k = i; k <= j; ++k) x[k] = 1;
      out.insert(x);
    }
  return out;
}

}  // namespace oracle
