#include "tiltlab/forms.hpp"

#include <string>

#include "tiltlab/error.hpp"
#include "tiltlab/homology.hpp"
#include "tiltlab/mutation.hpp"

namespace tiltlab {

namespace {

long long to_ll(const Integer& z) {
  if (!z.fits_slong_p()) throw ComputationError("integer " + z.get_str() + " does not fit in 64 bits");
  return z.get_si();
}

Integer bilinear(const IntMatrix& e, const DimensionVector& x, const DimensionVector& y) {
  if (x.size() != e.rows() || y.size() != e.cols()) throw ValidationError("dimension vector has the wrong length");
  Integer s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0) s += e(i, j) * to_integer(x[i] * y[j]);
  }
  return s;
}

}  // namespace

IntMatrix euler_matrix(const BoundQuiverAlgebra& a) { return inverse_unimodular(a.cartan()).transpose(); }

long long euler_pairing(const BoundQuiverAlgebra& a, const DimensionVector& x, const DimensionVector& y) {
  return to_ll(bilinear(euler_matrix(a), x, y));
}

long long quadratic_form(const BoundQuiverAlgebra& a, const DimensionVector& x) { return euler_pairing(a, x, x); }

long long tits_expression(const BoundQuiverAlgebra& a, const DimensionVector& x) {
  if (x.size() != a.size()) throw ValidationError("dimension vector has the wrong length");
  long long s = 0;
  for (long long v : x) s += v * v;
  for (const Arrow& ar : a.quiver().arrows()) s -= x[ar.source] * x[ar.target];
  for (const AlgebraElement& r : a.relations()) s += x[r.source] * x[r.target];
  return s;
}

long long tits_form(const BoundQuiverAlgebra& a, const DimensionVector& x) {
  if (global_dimension(a) > 2) throw ValidationError("Tits form needs global dimension at most 2");
  return tits_expression(a, x);
}

CoxeterData coxeter(const BoundQuiverAlgebra& a, std::size_t cap) {
  CoxeterData d;
  d.cartan_inverse = inverse_unimodular(a.cartan());
  d.phi = a.cartan().transpose() * d.cartan_inverse;
  if (a.n() % 2 == 1) d.phi = d.phi.scaled(Integer(-1));
  d.order = matrix_order(d.phi, cap);
  return d;
}

IntMatrix reflection_s(const BoundQuiverAlgebra& a, int k) {
  const std::size_t l = a.size();
  const IntMatrix e = euler_matrix(a);
  IntMatrix s = IntMatrix::identity(l);
  // 2(x, e_k) = <x,e_k> + <e_k,x> = Σ_j (E_jk + E_kj) x_j
  for (std::size_t j = 0; j < l; ++j) s(k, j) -= e(j, k) + e(k, j);
  return s;
}

ReflectionMatrix reflection_t(const BoundQuiverAlgebra& a, int k, std::size_t stage) {
  ReflectionMatrix t;
  t.vertex = k;
  t.algebra_stage = stage;
  t.matrix = reflection_s(a, k);
  if (a.n() % 2 == 0)
    for (std::size_t j = 0; j < a.size(); ++j) t.matrix(k, j) = -t.matrix(k, j);
  return t;
}

ReflectionSequence reflection_sequence(const BoundQuiverAlgebra& a) {
  TiltSequence seq = tilt_sequence(a);
  ReflectionSequence out;
  out.reflections = seq.reflections;
  const std::size_t l = a.size();
  out.product = IntMatrix::identity(l);
  out.product_inverse = IntMatrix::identity(l);
  for (const auto& t : out.reflections) {
    out.product = t.matrix * out.product;
    out.product_inverse = out.product_inverse * inverse_unimodular(t.matrix);
  }
  return out;
}

DimensionVector apply_matrix(const IntMatrix& m, const DimensionVector& x) {
  if (x.size() != m.cols()) throw ValidationError("dimension vector has the wrong length");
  DimensionVector y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (x[j] != 0) s += m(i, j) * to_integer(x[j]);
    y[i] = to_ll(s);
  }
  return y;
}

DimensionVector unit_vector(std::size_t l, std::size_t i) {
  DimensionVector e(l, 0);
  e[i] = 1;
  return e;
}

DimensionVector dimension_of_projective(const BoundQuiverAlgebra& a, int i) {
  DimensionVector d(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) d[v] = to_ll(a.cartan()(v, i));
  return d;
}

DimensionVector dimension_of_injective(const BoundQuiverAlgebra& a, int i) {
  DimensionVector d(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) d[v] = to_ll(a.cartan()(i, v));
  return d;
}

}  // namespace tiltlab
