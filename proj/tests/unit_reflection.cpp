#include <doctest.h>

#include "support.hpp"
#include "tiltlab/error.hpp"
#include "tiltlab/forms.hpp"
#include "tiltlab/mutation.hpp"
#include "tiltlab/reflection.hpp"

using namespace tiltlab;
using testing::load;
using testing::vertex;

TEST_CASE("reflection at the sink of A3 is the classical one") {
  BoundQuiverAlgebra a = load("a3");
  // P_3 = (1,1,1) goes to the module of dimension (0,1,1)
  FunctorResult r = reflect_plus(a, 0, projective_rep(a, 2));
  CHECK(r.dim_check);
  CHECK(r.rep_out.dimension_vector() == DimensionVector{0, 1, 1});
  CHECK(reflect_plus(a, 0, simple_rep(a, 0)).rep_out.is_zero());
  CHECK_FALSE(in_F0(a, 0, simple_rep(a, 0)));
  CHECK(in_F0(a, 0, simple_rep(a, 1)));
}

TEST_CASE("reflection functors on the commutative square example") {
  BoundQuiverAlgebra a = load("example3_4");
  MutationResult m = apr_tilt(a, 0);
  for (std::size_t j = 1; j < a.size(); ++j) {
    Representation p = projective_rep(a, static_cast<int>(j));
    REQUIRE(in_F0(a, 0, p));
    FunctorResult r = reflect_plus(m, p);
    CHECK(r.dim_check);
    CHECK(is_representation(m.algebra_out, r.rep_out));
  }
  // T^- undoes T^+ on F_0
  MutationResult back = apr_cotilt(m.algebra_out, 0);
  auto iso = match_bound_quivers(a, back.algebra_out);
  REQUIRE(iso);
  std::mt19937_64 rng(2);
  for (std::size_t j = 1; j < a.size(); ++j) {
    Representation p = projective_rep(a, static_cast<int>(j));
    FunctorResult minus = reflect_minus(back, reflect_plus(m, p).rep_out);
    CHECK(minus.dim_check);
    CHECK(find_isomorphism(a, pull_back(*iso, minus.rep_out), p, rng));
  }
  CHECK_THROWS_AS(reflect_plus(back, projective_rep(m.algebra_out, 1)), ValidationError);
  CHECK_THROWS_AS(reflect_minus(m, projective_rep(a, 1)), ValidationError);
}

TEST_CASE("the APR tilting module has the expected summands") {
  BoundQuiverAlgebra a = load("examref1");
  auto t = apr_tilting_module(a, 0);
  REQUIRE(t.size() == 4);
  CHECK(t[0].dimension_vector() == DimensionVector{0, 1, 1, 1});
  for (std::size_t i = 1; i < t.size(); ++i) CHECK(t[i].dimension_vector() == dimension_of_projective(a, static_cast<int>(i)));
}

TEST_CASE("Coxeter functors and the simple projectives of the stages") {
  BoundQuiverAlgebra a = load("example3_4");
  TiltSequence s = tilt_sequence(a);
  std::mt19937_64 rng(5);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    Representation p = rebuild_from_simple(s, i);
    CHECK(find_isomorphism(a, p, projective_rep(a, s.order[i - 1]), rng));
  }
  // I_6 is not projective, so Φ^+ I_6 = τ_2 I_6 = S_4 is nonzero
  Representation x = injective_rep(a, vertex(a, "6"));
  Representation y = coxeter_plus(s, x);
  CHECK(y.dimension_vector() == DimensionVector{0, 0, 0, 1, 0, 0});
  CHECK(find_isomorphism(a, y, tau_n(a, x), rng));
  CHECK(find_isomorphism(a, coxeter_minus(s, y), x, rng));
  CHECK_THROWS_AS(rebuild_from_simple(s, 0), ValidationError);
  CHECK_THROWS_AS(rebuild_from_simple(s, 7), ValidationError);
}
