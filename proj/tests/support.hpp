#pragma once

#include <random>
#include <string>
#include <vector>

#include "tiltlab/algebra.hpp"
#include "tiltlab/homology.hpp"
#include "tiltlab/io.hpp"
#include "tiltlab/representation.hpp"

namespace testing {

using namespace tiltlab;

inline std::string data_path(const std::string& name) { return std::string(TILTLAB_DATA_DIR) + "/" + name + ".json"; }

inline BoundQuiverAlgebra load(const std::string& name) { return load_algebra(data_path(name)); }

inline const std::vector<std::string>& shipped_algebras() {
  static const std::vector<std::string> names{"a2",          "a3",          "a3_mixed", "point",         "example3_4",
                                              "auslanderA3", "examref1",    "examref2", "radsq_a5_n4",   "nrf_12"};
  return names;
}

// The shipped algebras whose Φ-orbits of injectives stay positive.
inline const std::vector<std::string>& nrf_algebras() {
  static const std::vector<std::string> names{"a2", "a3", "a3_mixed", "point", "example3_4", "auslanderA3", "nrf_12"};
  return names;
}

inline DimensionVector vertex_label_vector(const BoundQuiverAlgebra& a, const std::vector<long long>& by_label) {
  // by_label[i] is the entry at the vertex labelled i+1
  DimensionVector x(a.size(), 0);
  for (std::size_t i = 0; i < by_label.size(); ++i) x[*a.quiver().vertex_index(std::to_string(i + 1))] = by_label[i];
  return x;
}

inline int vertex(const BoundQuiverAlgebra& a, const std::string& label) { return *a.quiver().vertex_index(label); }

inline std::vector<std::vector<long long>> plain(const IntMatrix& m) {
  std::vector<std::vector<long long>> out(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_si();
  return out;
}

inline DimensionVector random_vector(std::mt19937_64& rng, std::size_t l, long long lo, long long hi) {
  std::uniform_int_distribution<long long> d(lo, hi);
  DimensionVector x(l);
  for (auto& v : x) v = d(rng);
  return x;
}

// Small modules: cokernels of random maps between sums of projectives,
// kernels of random maps between sums of injectives, and simples.
inline Representation random_module(const BoundQuiverAlgebra& a, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> vert(0, static_cast<int>(a.size()) - 1);
  std::uniform_int_distribution<int> count(1, 2);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<int> kind(0, 4);
  const int k = kind(rng);
  if (k == 0) return simple_rep(a, vert(rng));
  std::vector<int> from, to;
  for (int i = count(rng); i > 0; --i) from.push_back(vert(rng));
  for (int i = count(rng); i > 0; --i) to.push_back(vert(rng));
  const bool proj = k <= 2;
  Representation x = proj ? projective_sum(a, from) : injective_sum(a, from);
  Representation y = proj ? projective_sum(a, to) : injective_sum(a, to);
  std::vector<RepMorphism> basis = hom_basis(a, x, y);
  RepMorphism f;
  for (std::size_t v = 0; v < a.size(); ++v) f.components.emplace_back(y.dims[v], x.dims[v]);
  for (const auto& b : basis) {
    Rational c(coeff(rng));
    for (std::size_t v = 0; v < a.size(); ++v) f.components[v] += b.components[v].scaled(c);
  }
  return proj ? cokernel(a, y, f).rep : kernel(a, x, f).rep;
}

}  // namespace testing
