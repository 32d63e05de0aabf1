#include <doctest.h>

#include "oracle.hpp"
#include "support.hpp"
#include "tiltlab/error.hpp"
#include "tiltlab/forms.hpp"
#include "tiltlab/roots.hpp"

using namespace tiltlab;
using testing::load;
using testing::plain;

namespace {

std::set<oracle::Vec> as_set(const RootSet& r) { return {r.begin(), r.end()}; }

std::set<oracle::Vec> oracle_phi_positive(const BoundQuiverAlgebra& a, const std::set<oracle::Vec>& roots) {
  CoxeterData cox = coxeter(a);
  oracle::Mat phi = plain(cox.phi);
  std::set<oracle::Vec> out;
  for (const auto& x : roots) {
    oracle::Vec y = x;
    bool ok = true;
    for (std::size_t m = 0; m < cox.order && ok; ++m) {
      for (long long v : y) ok = ok && v >= 0;
      y = oracle::apply(phi, y);
    }
    if (ok) out.insert(x);
  }
  return out;
}

}  // namespace

TEST_CASE("root search agrees with brute force") {
  for (const auto& name : testing::shipped_algebras()) {
    BoundQuiverAlgebra a = load(name);
    const long long bound = a.size() <= 6 ? 2 : 1;
    std::set<oracle::Vec> expect = oracle::brute_force_roots(plain(euler_matrix(a)), bound);
    CHECK_MESSAGE(as_set(positive_roots(a, bound)) == expect, name);
    CHECK_MESSAGE(as_set(phi_positive_roots(a, bound)) == oracle_phi_positive(a, expect), name);
  }
}

TEST_CASE("root search works for forms of every signature") {
  // radical square zero A5 with n = 4 has an indefinite symmetrized form
  BoundQuiverAlgebra a = load("radsq_a5_n4");
  for (long long bound = 1; bound <= 3; ++bound)
    CHECK(as_set(positive_roots(a, bound)) == oracle::brute_force_roots(plain(euler_matrix(a)), bound));
}

TEST_CASE("node cap is enforced") {
  CHECK_THROWS_AS(positive_roots(load("example3_4"), 2, 5), ComputationError);
  CHECK_THROWS_AS(positive_roots(load("example3_4"), 0), ValidationError);
}

TEST_CASE("cluster-roots of the commutative square example via Φ") {
  BoundQuiverAlgebra a = load("example3_4");
  ClusterRootTable t = cluster_roots_phi(a);
  CHECK(t.all_roots.size() == 10);
  CHECK(t.exponents == std::vector<std::size_t>{0, 0, 0, 1, 1, 2});
  // I_1 = P_3, I_2 = P_5, I_3 = P_6, I_4 -> P_2, I_5 -> P_4, I_6 -> S_4 -> P_1
  CHECK(t.sigma == std::vector<int>{2, 4, 5, 1, 3, 0});
  CHECK(t.orbits[5].back() == dimension_of_projective(a, 0));
}

TEST_CASE("cluster-roots via reflections match the Φ orbits") {
  for (const auto& name : testing::nrf_algebras()) {
    BoundQuiverAlgebra a = load(name);
    if (a.size() == 1) {
      // no tilt at the only vertex: P_1 is injective
      CHECK_THROWS_AS(cluster_roots_reflections(a), ValidationError);
      continue;
    }
    ReflectionRoots r = cluster_roots_reflections(a);
    CHECK_MESSAGE(r.all_roots == cluster_roots_phi(a).all_roots, name);
    std::vector<int> order = admissible_ordering(a.quiver());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(r.p[i] == dimension_of_projective(a, order[i]));
  }
}

TEST_CASE("orbits close") {
  BoundQuiverAlgebra a = load("example3_4");
  CoxeterData cox = coxeter(a);
  auto o = orbit(cox.phi, unit_vector(6, 0), 20);
  CHECK(o.size() == 5);
  CHECK_THROWS_AS(orbit(cox.phi, unit_vector(6, 0), 3), ComputationError);
}

TEST_CASE("classification of vectors") {
  BoundQuiverAlgebra a = load("example3_4");
  RootClassification p = classify(a, {0, 0, 0, 0, 1, 1});
  CHECK(p.is_root);
  CHECK(p.phi_positive);
  CHECK(p.sign_coherent);
  CHECK_FALSE(p.witness);
  RootClassification m = classify(a, {0, 1, 1, 1, 0, 0});
  CHECK(m.is_root);
  CHECK_FALSE(m.phi_positive);
  CHECK_FALSE(m.sign_coherent);
  CHECK(m.witness == std::optional<std::size_t>{1});
  RootClassification n = classify(a, {0, 0, 0, 0, -1, -1});
  CHECK(n.phi_nonpositive);
  CHECK(n.sign_coherent);
  CHECK_FALSE(classify(a, {1, 1, 1, 1, 1, 1}).is_root);
}

TEST_CASE("conjecture report") {
  ConjectureReport r = check_conjecture(load("example3_4"));
  CHECK(r.bound == 2);
  CHECK(r.verdict == "holds within box");
  CHECK(r.conjecture_applies);
  CHECK(r.cluster_roots_outside_box == 0);
  CHECK(r.only_cluster.empty());
  CHECK(r.only_phi_positive.empty());
  ConjectureReport h = check_conjecture(load("a3"), 1);
  CHECK_FALSE(h.conjecture_applies);
  CHECK(h.phi_positive_roots.empty());
  CHECK(h.only_cluster.size() == 6);
}
