#pragma once

#include <cstddef>
#include <vector>

#include "tiltlab/algebra.hpp"
#include "tiltlab/linalg.hpp"
#include "tiltlab/representation.hpp"

namespace tiltlab {

struct CoxeterData {
  IntMatrix phi;  // (-1)^n C^t C^{-1}
  std::size_t order = 0;
  IntMatrix cartan_inverse;
};

struct ReflectionMatrix {
  int vertex = 0;
  IntMatrix matrix;
  std::size_t algebra_stage = 0;  // i for Λ^i, 1-based; 0 when standalone
};

struct ReflectionSequence {
  std::vector<ReflectionMatrix> reflections;  // t_1, ..., t_l
  IntMatrix product;                          // c = t_l ... t_1
  IntMatrix product_inverse;
};

// (C^{-1})^t, so that <x,y> = x^t E y.
IntMatrix euler_matrix(const BoundQuiverAlgebra& a);
long long euler_pairing(const BoundQuiverAlgebra& a, const DimensionVector& x, const DimensionVector& y);
long long quadratic_form(const BoundQuiverAlgebra& a, const DimensionVector& x);
// Combinatorial form from arrows and relations; requires gl.dim <= 2.
long long tits_form(const BoundQuiverAlgebra& a, const DimensionVector& x);
// Same expression without the global dimension check.
long long tits_expression(const BoundQuiverAlgebra& a, const DimensionVector& x);

CoxeterData coxeter(const BoundQuiverAlgebra& a, std::size_t cap = kDefaultOrderCap);

IntMatrix reflection_s(const BoundQuiverAlgebra& a, int k);
ReflectionMatrix reflection_t(const BoundQuiverAlgebra& a, int k, std::size_t stage = 0);
// Along the tilt sequence; t_i is taken from the Euler form of Λ^i.
ReflectionSequence reflection_sequence(const BoundQuiverAlgebra& a);

DimensionVector apply_matrix(const IntMatrix& m, const DimensionVector& x);
DimensionVector unit_vector(std::size_t l, std::size_t i);
DimensionVector dimension_of_projective(const BoundQuiverAlgebra& a, int i);  // column i of C
DimensionVector dimension_of_injective(const BoundQuiverAlgebra& a, int i);   // row i of C

}  // namespace tiltlab
