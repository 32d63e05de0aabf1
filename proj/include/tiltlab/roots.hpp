#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tiltlab/algebra.hpp"
#include "tiltlab/forms.hpp"
#include "tiltlab/representation.hpp"

namespace tiltlab {

inline constexpr std::size_t kDefaultNodeCap = 200000000;

using RootSet = std::set<DimensionVector>;

struct ClusterRootTable {
  std::vector<std::vector<DimensionVector>> orbits;  // dim I_i, Φ dim I_i, ..., dim P_{σ(i)}
  std::vector<int> sigma;
  std::vector<std::size_t> exponents;  // m_i = orbit length - 1
  RootSet all_roots;
};

ClusterRootTable cluster_roots_phi(const BoundQuiverAlgebra& a);

struct ReflectionRoots {
  std::vector<DimensionVector> p;  // p_i = t_1^{-1} ... t_{i-1}^{-1} e_i, by stage
  std::vector<DimensionVector> q;  // q_j = t_l ... t_{j+1} e_j
  std::vector<std::vector<DimensionVector>> chains;  // p_i, c^{-1} p_i, ... up to the first q_j
  RootSet all_roots;
};

ReflectionRoots cluster_roots_reflections(const BoundQuiverAlgebra& a);
ReflectionRoots cluster_roots_reflections(const ReflectionSequence& seq, const std::vector<int>& order);

// x, m x, m^2 x, ... until the start vector reappears (the start is not repeated).
std::vector<DimensionVector> orbit(const IntMatrix& m, const DimensionVector& x, std::size_t cap);

// Nonzero x in [0, bound]^l with q(x) = 1. Throws ComputationError past node_cap.
RootSet positive_roots(const BoundQuiverAlgebra& a, long long bound, std::size_t node_cap = kDefaultNodeCap);
// The Φ-positive ones among them, found with the Φ^m x >= 0 constraints in the search.
RootSet phi_positive_roots(const BoundQuiverAlgebra& a, long long bound, std::size_t node_cap = kDefaultNodeCap);

struct RootClassification {
  bool is_root = false;
  bool phi_positive = false;
  bool phi_nonpositive = false;
  bool sign_coherent = false;
  std::optional<std::size_t> witness;  // first m with mixed signs in Φ^m x
};

RootClassification classify(const BoundQuiverAlgebra& a, const DimensionVector& x);
RootClassification classify(const BoundQuiverAlgebra& a, const CoxeterData& cox, const DimensionVector& x);

struct ConjectureReport {
  long long bound = 0;
  RootSet cluster_roots;        // S1, all of them
  RootSet phi_positive_roots;   // S2, within the box
  std::size_t cluster_roots_outside_box = 0;
  bool cluster_in_phi_positive = false;  // in-box part of S1 inside S2
  bool phi_positive_in_cluster = false;  // S2 inside S1
  RootSet only_cluster;                  // in-box S1 minus S2
  RootSet only_phi_positive;             // S2 minus S1
  bool cluster_sign_coherent = false;
  bool conjecture_applies = false;       // n == 2
  std::string verdict;                   // "holds within box" or "fails within box"
};

// bound <= 0 selects the largest cluster-root coordinate plus one.
ConjectureReport check_conjecture(const BoundQuiverAlgebra& a, long long bound = 0,
                                  std::size_t node_cap = kDefaultNodeCap);

}  // namespace tiltlab
