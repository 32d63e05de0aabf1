#include "tiltlab/mutation.hpp"

#include <functional>
#include <map>
#include <set>
#include <string>

#include "tiltlab/error.hpp"

namespace tiltlab {

namespace {

using Namer = std::function<std::string(const std::string& k, const std::string& j, int idx)>;

AlgebraElement translate(const AlgebraElement& x, const Quiver& from, const Quiver& to) {
  AlgebraElement y(x.source, x.target);
  for (const auto& [p, c] : x.terms) {
    Path m{p.source, p.target, {}};
    for (int a : p.arrows) {
      auto idx = to.arrow_index(from.arrow(a).name);
      if (!idx) throw ComputationError("arrow " + from.arrow(a).name + " does not survive the mutation");
      m.arrows.push_back(*idx);
    }
    y.add(m, c);
  }
  return y;
}

AlgebraElement normalized(const AlgebraElement& x) {
  if (x.is_zero()) return x;
  return x.scaled(1 / x.terms.begin()->second);
}

MutationResult tilt_impl(const BoundQuiverAlgebra& a, int k, const Namer& name_of) {
  const Quiver& q = a.quiver();
  const std::size_t l = a.size();
  if (k < 0 || static_cast<std::size_t>(k) >= l) throw ValidationError("vertex out of range");
  const std::string& kl = q.label(k);
  if (!q.is_sink(k)) throw ValidationError("vertex " + kl + " is not a sink");
  if (a.n() < 1) throw ValidationError("mutation needs n >= 1");
  const std::size_t n = static_cast<std::size_t>(a.n());

  Representation pk = projective_rep(a, k);
  Resolution res = minimal_injective_resolution(a, pk, n, true);
  if (!res.complete) throw ValidationError("inj.dim P_" + kl + " exceeds n = " + std::to_string(n));
  if (res.length() != n)
    throw ValidationError("inj.dim P_" + kl + " is " + std::to_string(res.length()) + ", not n = " +
                          std::to_string(n));
  for (std::size_t v = 0; v < l; ++v) {
    Representation iv = injective_rep(a, static_cast<int>(v));
    for (std::size_t i = 0; i < n; ++i)
      if (ext_dim(a, iv, pk, i) != 0)
        throw ValidationError("Ext^" + std::to_string(i) + "(I_" + q.label(static_cast<int>(v)) + ", P_" + kl +
                              ") is nonzero");
  }
  if (n == 1)
    for (const auto& r : a.relations())
      if (r.target == k) throw ValidationError("relation ending at " + kl + " with n = 1");

  MutationResult out;
  out.algebra_in = a;
  out.vertex = k;
  out.b_vertices = res.terms[n - 1];
  out.c_vertices = res.terms[n];
  out.differential = res.differentials[n - 1];

  std::vector<Arrow> arrows;
  std::set<std::string> names;
  for (const Arrow& ar : q.arrows()) {
    if (ar.target == k) {
      out.removed_arrows.push_back(ar);
    } else {
      arrows.push_back(ar);
      names.insert(ar.name);
    }
  }
  std::map<int, int> seen;
  std::vector<std::string> new_names;
  for (int j : out.c_vertices) {
    std::string nm = name_of(kl, q.label(j), ++seen[j]);
    while (names.count(nm)) nm += "'";
    names.insert(nm);
    new_names.push_back(nm);
    Arrow ar{nm, k, j};
    arrows.push_back(ar);
    out.new_arrows.push_back(ar);
  }
  Quiver q2(q.labels(), arrows);

  std::vector<AlgebraElement> rels;
  for (const auto& r : a.relations())
    if (r.target != k) out.kept_relations.push_back(translate(r, q, q2));
  for (const auto& nm : new_names) out.new_arrow_of_c.push_back(*q2.arrow_index(nm));
  if (n > 1) {
    for (std::size_t b = 0; b < out.b_vertices.size(); ++b) {
      AlgebraElement rel(k, out.b_vertices[b]);
      for (std::size_t c = 0; c < out.c_vertices.size(); ++c) {
        AlgebraElement acb = translate(out.differential[c][b], q, q2);
        Path star{k, out.c_vertices[c], {out.new_arrow_of_c[c]}};
        for (const auto& [p, coef] : acb.terms) rel.add(concatenate(star, p), coef);
      }
      if (rel.is_zero()) throw ComputationError("mutation at " + kl + " produced a zero relation");
      out.new_relations.push_back(normalized(rel));
    }
  }
  rels = out.kept_relations;
  rels.insert(rels.end(), out.new_relations.begin(), out.new_relations.end());
  try {
    out.algebra_out = BoundQuiverAlgebra(q2, a.n(), rels);
  } catch (const Error& e) {
    throw ComputationError(std::string("mutation output rejected: ") + e.what());
  }
  ValidationReport rep = validate(out.algebra_out);
  if (!(rep.acyclic && rep.connected && rep.relations_in_J2 && rep.relations_minimal))
    throw ComputationError("mutation output at " + kl + " fails validation");
  return out;
}

}  // namespace

MutationResult apr_tilt(const BoundQuiverAlgebra& a, int k) {
  return tilt_impl(a, k, [](const std::string& kl, const std::string& j, int idx) {
    return kl + "to" + j + "_" + std::to_string(idx);
  });
}

MutationResult apr_cotilt(const BoundQuiverAlgebra& a, int k) {
  if (k < 0 || static_cast<std::size_t>(k) >= a.size()) throw ValidationError("vertex out of range");
  if (!a.quiver().is_source(k)) throw ValidationError("vertex " + a.quiver().label(k) + " is not a source");
  MutationResult op = tilt_impl(a.opposite(), k, [](const std::string& kl, const std::string& j, int idx) {
    return j + "to" + kl + "_" + std::to_string(idx);
  });
  MutationResult out = op;
  out.inverse = true;
  out.algebra_in = a;
  out.algebra_out = op.algebra_out.opposite();
  for (auto& ar : out.new_arrows) std::swap(ar.source, ar.target);
  for (auto& ar : out.removed_arrows) std::swap(ar.source, ar.target);
  for (auto& r : out.kept_relations) r = reverse_element(r);
  for (auto& r : out.new_relations) r = reverse_element(r);
  return out;
}

TiltSequence tilt_sequence(const BoundQuiverAlgebra& a) { return tilt_sequence(a, admissible_ordering(a.quiver())); }

TiltSequence tilt_sequence(const BoundQuiverAlgebra& a, const std::vector<int>& order) {
  TiltSequence seq;
  seq.order = order;
  seq.stages.push_back(a);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const BoundQuiverAlgebra& cur = seq.stages.back();
    try {
      seq.reflections.push_back(reflection_t(cur, order[i], i + 1));
      seq.mutations.push_back(apr_tilt(cur, order[i]));
    } catch (const Error& e) {
      const std::string what = "stage " + std::to_string(i + 1) + ": " + e.what();
      switch (e.kind()) {
        case ErrorKind::Validation: throw ValidationError(what);
        case ErrorKind::Computation: throw ComputationError(what);
        case ErrorKind::Input: throw InputError(what);
      }
      throw;
    }
    seq.stages.push_back(seq.mutations.back().algebra_out);
  }
  seq.rotation = match_bound_quivers(a, seq.stages.back());
  seq.rotation_check = seq.rotation.has_value();
  return seq;
}

}  // namespace tiltlab
