#pragma once

#include <cstddef>
#include <vector>

#include "tiltlab/algebra.hpp"
#include "tiltlab/representation.hpp"

namespace tiltlab {

// Entry [r][c] lies in e_{row vertex r} Λ e_{column vertex c}.
using AlgebraMatrix = std::vector<std::vector<AlgebraElement>>;

// Sums of indecomposable projectives/injectives, one summand per listed vertex.
Representation projective_sum(const BoundQuiverAlgebra& a, const std::vector<int>& vertices);
Representation injective_sum(const BoundQuiverAlgebra& a, const std::vector<int>& vertices);

// ⊕P_from -> ⊕P_to; entry λ sends e_u to λ (left multiplication).
RepMorphism projective_map(const BoundQuiverAlgebra& a, const std::vector<int>& from, const std::vector<int>& to,
                           const AlgebraMatrix& m);
// ν of the map above: ⊕I_from -> ⊕I_to, with I_u -> I_v precomposing by ·λ.
RepMorphism nakayama_map(const BoundQuiverAlgebra& a, const std::vector<int>& from, const std::vector<int>& to,
                         const AlgebraMatrix& m);

struct Resolution {
  enum class Kind { Projective, Injective };
  Kind kind = Kind::Projective;
  std::vector<std::vector<int>> terms;  // summand vertices of each term
  // Projective: differentials[j] : P_{j+1} -> P_j (rows: summands of P_j).
  // Injective:  differentials[j] : I^j -> I^{j+1} (rows: summands of I^{j+1}).
  std::vector<AlgebraMatrix> differentials;
  std::vector<RepMorphism> maps;  // the same differentials as linear maps
  bool minimal = true;
  bool complete = true;  // false when truncated

  // Index of the last nonzero term; 0 for the zero module as well.
  std::size_t length() const { return terms.empty() ? 0 : terms.size() - 1; }
  DimensionVector multiplicities(std::size_t j, std::size_t vertex_count) const;
};

// With truncate = false a resolution needing more than maxlen + 1 terms throws
// ComputationError; with truncate = true it is cut off and marked incomplete.
Resolution minimal_projective_resolution(const BoundQuiverAlgebra& a, const Representation& x, std::size_t maxlen,
                                         bool truncate = false);
Resolution minimal_injective_resolution(const BoundQuiverAlgebra& a, const Representation& x, std::size_t maxlen,
                                        bool truncate = false);

std::size_t ext_dim(const BoundQuiverAlgebra& a, const Representation& x, const Representation& y, std::size_t j);
std::size_t projective_dimension(const BoundQuiverAlgebra& a, const Representation& x);
std::size_t injective_dimension(const BoundQuiverAlgebra& a, const Representation& x);
std::size_t global_dimension(const BoundQuiverAlgebra& a);

// Kernel of ν(d_n) and cokernel of ν^{-1}(d^{n-1}); zero if the resolution is too short.
Representation tau_n(const BoundQuiverAlgebra& a, const Representation& x);
Representation tau_n_minus(const BoundQuiverAlgebra& a, const Representation& x);

struct ClusterSummand {
  int vertex = 0;         // it is τ_n^{-shift} P_vertex
  std::size_t shift = 0;
  Representation module;
};

struct NClusterTiltingReport {
  std::vector<ClusterSummand> summands;
  std::vector<DimensionVector> dimension_vectors;
  bool dimension_vectors_distinct = false;
  std::vector<std::size_t> ext_vanishing;  // entry j-1: Σ dim Ext^j over summand pairs, 0 < j < n
  bool is_candidate_valid = false;
};

// Iterates τ_n^- on each P_i until zero. cap = 0 selects 10 · l · ord(Φ).
NClusterTiltingReport verify_n_cluster_tilting(const BoundQuiverAlgebra& a, std::size_t cap = 0);

}  // namespace tiltlab
