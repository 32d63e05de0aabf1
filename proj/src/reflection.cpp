#include "tiltlab/reflection.hpp"

#include "tiltlab/error.hpp"
#include "tiltlab/forms.hpp"
#include "tiltlab/homology.hpp"
#include "tiltlab/linalg.hpp"

namespace tiltlab {

namespace {

// Kernel construction for a tilt (possibly one computed on an opposite algebra).
Representation kernel_functor(const MutationResult& m, const Representation& x) {
  const BoundQuiverAlgebra& a = m.algebra_in;
  check_representation(a, x);
  const auto& B = m.b_vertices;
  const auto& C = m.c_vertices;
  std::vector<std::size_t> boff{0}, coff{0};
  for (int b : B) boff.push_back(boff.back() + x.dims[b]);
  for (int c : C) coff.push_back(coff.back() + x.dims[c]);
  // F : ⊕_C X_{j_c} -> ⊕_B X_{i_b}
  RatMatrix f(boff.back(), coff.back());
  for (std::size_t b = 0; b < B.size(); ++b)
    for (std::size_t c = 0; c < C.size(); ++c)
      if (!m.differential[c][b].is_zero()) f.set_block(boff[b], coff[c], element_action(a, x, m.differential[c][b]));
  RatMatrix ker = kernel_matrix(f);

  const Quiver& qin = a.quiver();
  const Quiver& qout = m.algebra_out.quiver();
  Representation y;
  y.dims = x.dims;
  y.dims[m.vertex] = ker.cols();
  y.maps.resize(qout.arrow_count());
  for (std::size_t e = 0; e < qout.arrow_count(); ++e) {
    auto old = qin.arrow_index(qout.arrow(e).name);
    if (old && qin.arrow(*old).target != m.vertex) y.maps[e] = x.maps[*old];
  }
  for (std::size_t c = 0; c < C.size(); ++c) y.maps[m.new_arrow_of_c[c]] = ker.block(coff[c], 0, x.dims[C[c]], ker.cols());
  check_representation(m.algebra_out, y);
  return y;
}

MutationResult as_opposite_tilt(const MutationResult& cot) {
  MutationResult op = cot;
  op.inverse = false;
  op.algebra_in = cot.algebra_in.opposite();
  op.algebra_out = cot.algebra_out.opposite();
  return op;
}

void require_rotation(const TiltSequence& seq) {
  if (!seq.rotation_check) throw ValidationError("rotation check failed; Coxeter functors are unavailable");
}

// T^- at stage index i: representation over stages[i+1] to one over stages[i].
Representation minus_step(const TiltSequence& seq, std::size_t i, const Representation& y) {
  MutationResult cot = apr_cotilt(seq.stages[i + 1], seq.order[i]);
  Representation r = reflect_minus(cot, y).rep_out;
  auto iso = match_bound_quivers(seq.stages[i], cot.algebra_out);
  if (!iso) throw ComputationError("cotilt does not return to stage " + std::to_string(i + 1));
  return pull_back(*iso, r);
}

}  // namespace

FunctorResult reflect_plus(const MutationResult& m, const Representation& x) {
  if (m.inverse) throw ValidationError("reflect_plus needs a tilt, not a cotilt");
  FunctorResult out;
  out.algebra_out = m.algebra_out;
  out.rep_out = kernel_functor(m, x);
  out.expected = apply_matrix(reflection_t(m.algebra_in, m.vertex).matrix, x.dimension_vector());
  out.dim_check = out.expected == out.rep_out.dimension_vector();
  return out;
}

FunctorResult reflect_plus(const BoundQuiverAlgebra& a, int k, const Representation& x) {
  return reflect_plus(apr_tilt(a, k), x);
}

FunctorResult reflect_minus(const MutationResult& cot, const Representation& y) {
  if (!cot.inverse) throw ValidationError("reflect_minus needs a cotilt");
  FunctorResult out;
  out.algebra_out = cot.algebra_out;
  out.rep_out = dual(kernel_functor(as_opposite_tilt(cot), dual(y)));
  check_representation(out.algebra_out, out.rep_out);
  IntMatrix t = reflection_t(cot.algebra_out, cot.vertex).matrix;
  out.expected = apply_matrix(inverse_unimodular(t), y.dimension_vector());
  out.dim_check = out.expected == out.rep_out.dimension_vector();
  return out;
}

FunctorResult reflect_minus(const BoundQuiverAlgebra& a, int k, const Representation& y) {
  return reflect_minus(apr_cotilt(a, k), y);
}

Representation coxeter_plus(const TiltSequence& seq, const Representation& x) {
  require_rotation(seq);
  Representation cur = x;
  for (const auto& m : seq.mutations) cur = reflect_plus(m, cur).rep_out;
  return pull_back(*seq.rotation, cur);
}

Representation coxeter_minus(const TiltSequence& seq, const Representation& x) {
  require_rotation(seq);
  check_representation(seq.stages.front(), x);
  Representation cur = push_forward(*seq.rotation, x);
  for (std::size_t i = seq.mutations.size(); i-- > 0;) cur = minus_step(seq, i, cur);
  return cur;
}

Representation coxeter_plus(const BoundQuiverAlgebra& a, const Representation& x) {
  return coxeter_plus(tilt_sequence(a), x);
}

Representation coxeter_minus(const BoundQuiverAlgebra& a, const Representation& x) {
  return coxeter_minus(tilt_sequence(a), x);
}

Representation rebuild_from_simple(const TiltSequence& seq, std::size_t stage) {
  if (stage < 1 || stage > seq.order.size()) throw ValidationError("stage out of range");
  Representation cur = simple_rep(seq.stages[stage - 1], seq.order[stage - 1]);
  for (std::size_t i = stage - 1; i-- > 0;) cur = minus_step(seq, i, cur);
  return cur;
}

std::vector<Representation> apr_tilting_module(const BoundQuiverAlgebra& a, int k) {
  std::vector<Representation> t{tau_n_minus(a, projective_rep(a, k))};
  for (std::size_t i = 0; i < a.size(); ++i)
    if (static_cast<int>(i) != k) t.push_back(projective_rep(a, static_cast<int>(i)));
  return t;
}

bool in_F0(const BoundQuiverAlgebra& a, int k, const Representation& x) {
  check_representation(a, x);
  for (const auto& t : apr_tilting_module(a, k))
    for (int j = 1; j <= a.n(); ++j)
      if (ext_dim(a, t, x, static_cast<std::size_t>(j)) != 0) return false;
  return true;
}

}  // namespace tiltlab
