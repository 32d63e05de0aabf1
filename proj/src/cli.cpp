#include "tiltlab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tiltlab/error.hpp"
#include "tiltlab/forms.hpp"
#include "tiltlab/homology.hpp"
#include "tiltlab/io.hpp"
#include "tiltlab/linalg.hpp"
#include "tiltlab/mutation.hpp"
#include "tiltlab/reflection.hpp"
#include "tiltlab/roots.hpp"

namespace tiltlab {

namespace {

struct Globals {
  bool json = false;
  long long seed = 1;
  long long cap = 0;  // 0: library defaults
};

int vertex_arg(const BoundQuiverAlgebra& a, const std::string& label) {
  auto v = a.quiver().vertex_index(label);
  if (!v) throw InputError("unknown vertex \"" + label + "\"");
  return *v;
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).fits_slong_p()) row.push_back(m(i, j).get_si());
      else row.push_back(m(i, j).get_str());
    }
    rows.push_back(row);
  }
  return rows;
}

std::string matrix_text(const IntMatrix& m) {
  std::size_t w = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) w = std::max(w, m(i, j).get_str().size());
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::string e = m(i, j).get_str();
      s += std::string(w - e.size() + (j ? 1 : 0), ' ') + e;
    }
    s += " ]\n";
  }
  return s;
}

Json vectors_json(const RootSet& roots) {
  Json arr = Json::array();
  for (const auto& x : roots) arr.push_back(x);
  return arr;
}

// Vectors as columns, one row per vertex.
std::string vectors_table(const BoundQuiverAlgebra& a, const std::vector<DimensionVector>& xs) {
  std::size_t lw = 1;
  for (const auto& l : a.quiver().labels()) lw = std::max(lw, l.size());
  std::size_t w = 1;
  for (const auto& x : xs)
    for (long long v : x) w = std::max(w, std::to_string(v).size());
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string& l = a.quiver().label(static_cast<int>(i));
    s += "  " + std::string(lw - l.size(), ' ') + l + " |";
    for (const auto& x : xs) {
      std::string e = std::to_string(x[i]);
      s += std::string(w - e.size() + 1, ' ') + e;
    }
    s += "\n";
  }
  return s;
}

std::string vertex_list(const BoundQuiverAlgebra& a, const std::vector<int>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + a.quiver().label(vs[i]);
  return s;
}

std::string arrow_text(const Quiver& q, const Arrow& ar) {
  return ar.name + ": " + q.label(ar.source) + " -> " + q.label(ar.target);
}

Json mutation_json(const MutationResult& m) {
  const Quiver& qi = m.algebra_in.quiver();
  const Quiver& qo = m.algebra_out.quiver();
  Json j;
  j["vertex"] = qi.label(m.vertex);
  j["inverse"] = m.inverse;
  j["removed_arrows"] = Json::array();
  for (const auto& ar : m.removed_arrows)
    j["removed_arrows"].push_back({{"name", ar.name}, {"from", qi.label(ar.source)}, {"to", qi.label(ar.target)}});
  j["new_arrows"] = Json::array();
  for (const auto& ar : m.new_arrows)
    j["new_arrows"].push_back({{"name", ar.name}, {"from", qo.label(ar.source)}, {"to", qo.label(ar.target)}});
  j["new_relations"] = Json::array();
  for (const auto& r : m.new_relations) j["new_relations"].push_back(format_element(qo, r));
  j["algebra"] = algebra_to_json(m.algebra_out);
  return j;
}

std::string mutation_text(const MutationResult& m) {
  const Quiver& qi = m.algebra_in.quiver();
  const Quiver& qo = m.algebra_out.quiver();
  std::ostringstream s;
  s << (m.inverse ? "cotilt" : "tilt") << " at vertex " << qi.label(m.vertex) << "\n";
  for (const auto& ar : m.removed_arrows) s << "  - arrow " << arrow_text(qi, ar) << "\n";
  for (const auto& ar : m.new_arrows) s << "  + arrow " << arrow_text(qo, ar) << "\n";
  for (const auto& r : m.algebra_in.relations()) {
    bool dropped = m.inverse ? r.source == m.vertex : r.target == m.vertex;
    if (dropped) s << "  - relation " << format_element(qi, r) << "\n";
  }
  for (const auto& r : m.new_relations) s << "  + relation " << format_element(qo, r) << "\n";
  s << "result arrows:\n";
  for (const auto& ar : qo.arrows()) s << "  " << arrow_text(qo, ar) << "\n";
  s << "result relations:\n";
  for (const auto& r : m.algebra_out.relations()) s << "  " << format_element(qo, r) << "\n";
  return s.str();
}

Representation module_arg(const BoundQuiverAlgebra& a, const std::string& spec) {
  if (spec.size() < 3 || spec[1] != '_') throw InputError("module must look like P_k, I_k or S_k");
  int v = vertex_arg(a, spec.substr(2));
  switch (spec[0]) {
    case 'P': return projective_rep(a, v);
    case 'I': return injective_rep(a, v);
    case 'S': return simple_rep(a, v);
  }
  throw InputError("module must look like P_k, I_k or S_k");
}

std::string roots_text(const BoundQuiverAlgebra& a, const RootSet& roots) {
  std::string s;
  for (const auto& x : roots) s += "  " + format_vector(x) + "\n";
  s += vectors_table(a, {roots.begin(), roots.end()});
  return s;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations with bound quiver algebras", "tiltlab"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "JSON output");
  app.add_option("--seed", g.seed, "seed for randomized isomorphism witnessing");
  app.add_option("--cap", g.cap, "iteration or search cap");

  std::string alg, rep, x_arg, y_arg, method = "both", vertex, module, kind = "projective";
  long long bound = 0;
  bool inverse = false;
  std::function<void()> action;

  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    s->add_option("algebra", alg, "algebra file")->required();
    return s;
  };
  auto with_rep = [&](CLI::App* s) { s->add_option("representation", rep, "representation file")->required(); };

  auto emit = [&](const Json& j, const std::string& text) {
    if (g.json) out << j.dump(2) << "\n";
    else out << text;
  };
  auto cap_or = [&](std::size_t dflt) { return g.cap > 0 ? static_cast<std::size_t>(g.cap) : dflt; };

  sub("validate", "check structural preconditions")->callback([&] {
    action = [&] {
      BoundQuiverAlgebra a = load_algebra(alg);
      ValidationReport r = validate(a);
      Json j{{"acyclic", r.acyclic},
             {"connected", r.connected},
             {"relations_in_J2", r.relations_in_J2},
             {"relations_minimal", r.relations_minimal},
             {"labeling_admissible", r.labeling_admissible}};
      std::vector<std::string> ord;
      for (int v : r.admissible_ordering) ord.push_back(a.quiver().label(v));
      j["admissible_ordering"] = ord;
      j["ok"] = r.ok();
      std::ostringstream s;
      for (const char* k : {"acyclic", "connected", "relations_in_J2", "relations_minimal", "labeling_admissible"})
        s << k << ": " << (j[k].get<bool>() ? "yes" : "no") << "\n";
      s << "admissible ordering: " << vertex_list(a, r.admissible_ordering) << "\n";
      s << "dimension: " << a.dimension() << "\n";
      emit(j, s.str());
      if (!r.ok()) throw ValidationError("validation failed");
    };
  });
  sub("cartan", "Cartan matrix")->callback([&] {
    action = [&] {
      BoundQuiverAlgebra a = load_algebra(alg);
      emit(Json{{"cartan", matrix_json(a.cartan())}}, "Cartan matrix (column j = dim P_j):\n" + matrix_text(a.cartan()));
    };
  });
  sub("coxeter", "Coxeter transformation and its order")->callback([&] {
    action = [&] {
      BoundQuiverAlgebra a = load_algebra(alg);
      CoxeterData d = coxeter(a, cap_or(kDefaultOrderCap));
      emit(Json{{"phi", matrix_json(d.phi)}, {"order", d.order}},
           "Phi:\n" + matrix_text(d.phi) + "order: " + std::to_string(d.order) + "\n");
    };
  });
  {
    auto* s = sub("euler", "Euler form <x,y>, or q(x) without --y");
    s->add_option("--x", x_arg)->required();
    s->add_option("--y", y_arg);
    s->callback([&] {
      action = [&] {
        BoundQuiverAlgebra a = load_algebra(alg);
        DimensionVector x = parse_vector(x_arg, a.size());
        DimensionVector y = y_arg.empty() ? x : parse_vector(y_arg, a.size());
        long long v = euler_pairing(a, x, y);
        emit(Json{{"x", x}, {"y", y}, {"value", v}}, std::to_string(v) + "\n");
      };
    });
  }
  {
    auto* s = sub("tits", "Tits form (global dimension at most 2)");
    s->add_option("--x", x_arg)->required();
    s->callback([&] {
      action = [&] {
        BoundQuiverAlgebra a = load_algebra(alg);
        DimensionVector x = parse_vector(x_arg, a.size());
        long long v = tits_form(a, x);
        emit(Json{{"x", x}, {"value", v}}, std::to_string(v) + "\n");
      };
    });
  }
  {
    auto* s = sub("cluster-roots", "dimension vectors of the cluster-indecomposables");
    s->add_option("--method", method)->check(CLI::IsMember({"phi", "reflections", "both"}));
    s->callback([&] {
      action = [&] {
        BoundQuiverAlgebra a = load_algebra(alg);
        Json j;
        std::ostringstream t;
        std::optional<RootSet> phi, refl;
        if (method != "reflections") {
          ClusterRootTable tab = cluster_roots_phi(a);
          phi = tab.all_roots;
          Json orbits = Json::array();
          for (std::size_t i = 0; i < tab.orbits.size(); ++i)
            orbits.push_back({{"vertex", a.quiver().label(static_cast<int>(i))},
                              {"orbit", tab.orbits[i]},
                              {"sigma", a.quiver().label(tab.sigma[i])},
                              {"m", tab.exponents[i]}});
          j["orbits"] = orbits;
          for (std::size_t i = 0; i < tab.orbits.size(); ++i)
            t << "orbit of I_" << a.quiver().label(static_cast<int>(i)) << " (m = " << tab.exponents[i]
              << ", ends at P_" << a.quiver().label(tab.sigma[i]) << "):\n"
              << vectors_table(a, tab.orbits[i]);
        }
        if (method != "phi") refl = cluster_roots_reflections(a).all_roots;
        const RootSet& roots = phi ? *phi : *refl;
        j["roots"] = vectors_json(roots);
        j["count"] = roots.size();
        t << roots.size() << " cluster-roots:\n" << roots_text(a, roots);
        if (phi && refl) {
          j["methods_agree"] = *phi == *refl;
          t << "methods agree: " << (*phi == *refl ? "true" : "false") << "\n";
        }
        emit(j, t.str());
        if (phi && refl && *phi != *refl) throw ComputationError("the two methods disagree");
      };
    });
  }
  {
    auto* s = sub("positive-roots", "positive roots of q inside [0,B]^l");
    s->add_option("--bound", bound)->required();
    s->callback([&] {
      action = [&] {
        BoundQuiverAlgebra a = load_algebra(alg);
        RootSet r = positive_roots(a, bound, cap_or(kDefaultNodeCap));
        emit(Json{{"bound", bound}, {"count", r.size()}, {"roots", vectors_json(r)}},
             std::to_string(r.size()) + " positive roots with entries at most " + std::to_string(bound) +
                 " (complete within box only):\n" + roots_text(a, r));
      };
    });
  }
  {
    auto* s = sub("classify", "Φ-positivity and sign coherence of a vector");
    s->add_option("--x", x_arg)->required();
    s->callback([&] {
      action = [&] {
        BoundQuiverAlgebra a = load_algebra(alg);
        DimensionVector x = parse_vector(x_arg, a.size());
        RootClassification c = classify(a, coxeter(a, cap_or(kDefaultOrderCap)), x);
        Json j{{"x", x},
               {"is_root", c.is_root},
               {"phi_positive", c.phi_positive},
               {"phi_nonpositive", c.phi_nonpositive},
               {"sign_coherent", c.sign_coherent}};
        j["witness"] = c.witness ? Json(*c.witness) : Json(nullptr);
        std::ostringstream t;
        auto yn = [](bool b) { return b ? "yes" : "no"; };
        t << "root: " << yn(c.is_root) << "\nphi-positive: " << yn(c.phi_positive)
          << "\nphi-nonpositive: " << yn(c.phi_nonpositive) << "\nsign-coherent: " << yn(c.sign_coherent) << "\n";
        if (c.witness) t << "mixed signs at m = " << *c.witness << "\n";
        emit(j, t.str());
      };
    });
  }
  {
    auto* s = sub("check-conjecture", "compare cluster-roots with Φ-positive roots in a box");
    s->add_option("--bound", bound);
    s->callback([&] {
      action = [&] {
        BoundQuiverAlgebra a = load_algebra(alg);
        ConjectureReport r = check_conjecture(a, bound, cap_or(kDefaultNodeCap));
        Json j{{"bound", r.bound},
               {"cluster_roots", r.cluster_roots.size()},
               {"phi_positive_roots", r.phi_positive_roots.size()},
               {"cluster_roots_outside_box", r.cluster_roots_outside_box},
               {"cluster_in_phi_positive", r.cluster_in_phi_positive},
               {"phi_positive_in_cluster", r.phi_positive_in_cluster},
               {"only_cluster", vectors_json(r.only_cluster)},
               {"only_phi_positive", vectors_json(r.only_phi_positive)},
               {"cluster_sign_coherent", r.cluster_sign_coherent},
               {"applies", r.conjecture_applies},
               {"verdict", r.verdict}};
        std::ostringstream t;
        t << "box: [0," << r.bound << "]^" << a.size() << " (results are relative to this box)\n";
        t << "cluster-roots: " << r.cluster_roots.size() << " (" << r.cluster_roots_outside_box << " outside the box)\n";
        t << "phi-positive roots: " << r.phi_positive_roots.size() << "\n";
        t << "cluster-roots sign-coherent: " << (r.cluster_sign_coherent ? "yes" : "no") << "\n";
        if (!r.only_cluster.empty()) t << "cluster-roots that are not phi-positive:\n" << roots_text(a, r.only_cluster);
        if (!r.only_phi_positive.empty())
          t << "phi-positive roots that are not cluster-roots:\n" << roots_text(a, r.only_phi_positive);
        t << "verdict: " << r.verdict << (r.conjecture_applies ? "" : " (informational, n != 2)") << "\n";
        emit(j, t.str());
      };
    });
  }
  {
    auto* s = sub("mutate", "tilt at a sink, or cotilt at a source with --inverse");
    s->add_option("--vertex", vertex)->required();
    s->add_flag("--inverse", inverse);
    s->callback([&] {
      action = [&] {
        BoundQuiverAlgebra a = load_algebra(alg);
        int k = vertex_arg(a, vertex);
        MutationResult m = inverse ? apr_cotilt(a, k) : apr_tilt(a, k);
        emit(mutation_json(m), mutation_text(m));
      };
    });
  }
  sub("tilt-sequence", "tilt at every vertex in an admissible order")->callback([&] {
    action = [&] {
      BoundQuiverAlgebra a = load_algebra(alg);
      TiltSequence seq = tilt_sequence(a);
      Json j;
      j["order"] = Json::array();
      for (int v : seq.order) j["order"].push_back(a.quiver().label(v));
      j["stages"] = Json::array();
      for (const auto& st : seq.stages) j["stages"].push_back(algebra_to_json(st));
      j["reflections"] = Json::array();
      for (const auto& t : seq.reflections)
        j["reflections"].push_back({{"vertex", a.quiver().label(t.vertex)},
                                    {"stage", t.algebra_stage},
                                    {"t", matrix_json(t.matrix)},
                                    {"t_inverse", matrix_json(inverse_unimodular(t.matrix))}});
      j["rotation_check"] = seq.rotation_check;
      std::ostringstream t;
      for (std::size_t i = 0; i < seq.mutations.size(); ++i) {
        t << "stage " << i + 1 << " -> " << i + 2 << ": " << mutation_text(seq.mutations[i]);
        t << "t_" << a.quiver().label(seq.order[i]) << ":\n" << matrix_text(seq.reflections[i].matrix);
      }
      t << "rotation check: " << (seq.rotation_check ? "true" : "false") << "\n";
      emit(j, t.str());
      if (!seq.rotation_check) throw ValidationError("last stage is not isomorphic to the input");
    };
  });
  {
    auto* s = sub("reflect", "reflection functor at a vertex");
    with_rep(s);
    s->add_option("--vertex", vertex)->required();
    s->add_flag("--inverse", inverse);
    s->callback([&] {
      action = [&] {
        BoundQuiverAlgebra a = load_algebra(alg);
        Representation x = load_representation(a, rep);
        int k = vertex_arg(a, vertex);
        FunctorResult r = inverse ? reflect_minus(a, k, x) : reflect_plus(a, k, x);
        Json j{{"algebra", algebra_to_json(r.algebra_out)},
               {"representation", representation_to_json(r.algebra_out, r.rep_out)},
               {"expected_dims", r.expected},
               {"dim_check", r.dim_check}};
        emit(j, representation_to_json(r.algebra_out, r.rep_out).dump(2) + "\ndim check: " +
                    (r.dim_check ? "true" : "false") + " (expected " + format_vector(r.expected) + ")\n");
      };
    });
  }
  {
    auto* s = sub("coxeter-functor", "composite of the reflection functors");
    with_rep(s);
    s->add_flag("--inverse", inverse);
    s->callback([&] {
      action = [&] {
        BoundQuiverAlgebra a = load_algebra(alg);
        Representation x = load_representation(a, rep);
        Representation y = inverse ? coxeter_minus(a, x) : coxeter_plus(a, x);
        Representation t = inverse ? tau_n_minus(a, x) : tau_n(a, x);
        std::mt19937_64 rng(static_cast<std::uint64_t>(g.seed));
        bool iso = find_isomorphism(a, y, t, rng).has_value();
        Json j{{"representation", representation_to_json(a, y)}, {"isomorphic_to_tau", iso}};
        emit(j, representation_to_json(a, y).dump(2) + "\nisomorphic to tau: " + (iso ? "true" : "false") + "\n");
      };
    });
  }
  {
    auto* s = sub("tau", "tau_n, or tau_n^- with --inverse");
    with_rep(s);
    s->add_flag("--inverse", inverse);
    s->callback([&] {
      action = [&] {
        BoundQuiverAlgebra a = load_algebra(alg);
        Representation x = load_representation(a, rep);
        Representation y = inverse ? tau_n_minus(a, x) : tau_n(a, x);
        emit(representation_to_json(a, y), representation_to_json(a, y).dump(2) + "\n");
      };
    });
  }
  {
    auto* s = sub("resolve", "minimal projective or injective resolution");
    s->add_option("--module", module)->required();
    s->add_option("--kind", kind)->check(CLI::IsMember({"projective", "injective"}));
    s->callback([&] {
      action = [&] {
        BoundQuiverAlgebra a = load_algebra(alg);
        Representation x = module_arg(a, module);
        const bool proj = kind == "projective";
        Resolution r = proj ? minimal_projective_resolution(a, x, a.size() + 1)
                            : minimal_injective_resolution(a, x, a.size() + 1);
        const Quiver& q = a.quiver();
        const char* sym = proj ? "P" : "I";
        Json terms = Json::array(), diffs = Json::array();
        std::ostringstream t;
        for (std::size_t i = 0; i < r.terms.size(); ++i) {
          std::vector<std::string> ls;
          std::string s;
          for (std::size_t u = 0; u < r.terms[i].size(); ++u) {
            ls.push_back(q.label(r.terms[i][u]));
            s += (u ? " + " : "") + std::string(sym) + "_" + ls.back();
          }
          terms.push_back(ls);
          t << "term " << i << ": " << (s.empty() ? "0" : s) << "\n";
        }
        for (std::size_t i = 0; i < r.differentials.size(); ++i) {
          Json m = Json::array();
          t << "differential " << i << ":\n";
          for (const auto& row : r.differentials[i]) {
            Json jr = Json::array();
            t << "  [";
            for (std::size_t c = 0; c < row.size(); ++c) {
              jr.push_back(format_element(q, row[c]));
              t << (c ? ", " : " ") << format_element(q, row[c]);
            }
            t << " ]\n";
            m.push_back(jr);
          }
          diffs.push_back(m);
        }
        t << "length: " << r.length() << "\n";
        emit(Json{{"kind", kind}, {"terms", terms}, {"differentials", diffs}, {"length", r.length()},
                  {"minimal", r.minimal}},
             t.str());
      };
    });
  }
  sub("gldim", "global dimension")->callback([&] {
    action = [&] {
      BoundQuiverAlgebra a = load_algebra(alg);
      std::size_t d = global_dimension(a);
      emit(Json{{"global_dimension", d}}, std::to_string(d) + "\n");
    };
  });
  sub("verify-nrf", "build the n-cluster tilting candidate and check Ext vanishing")->callback([&] {
    action = [&] {
      BoundQuiverAlgebra a = load_algebra(alg);
      NClusterTiltingReport r = verify_n_cluster_tilting(a, g.cap > 0 ? static_cast<std::size_t>(g.cap) : 0);
      Json sums = Json::array();
      std::ostringstream t;
      t << r.summands.size() << " summands:\n";
      for (const auto& s : r.summands) {
        sums.push_back({{"vertex", a.quiver().label(s.vertex)}, {"shift", s.shift}, {"dims", s.module.dimension_vector()}});
        t << "  tau^-" << s.shift << " P_" << a.quiver().label(s.vertex) << "  " << format_vector(s.module.dimension_vector())
          << "\n";
      }
      for (std::size_t j = 0; j < r.ext_vanishing.size(); ++j)
        t << "dim Ext^" << j + 1 << "(M,M) = " << r.ext_vanishing[j] << "\n";
      t << "dimension vectors distinct: " << (r.dimension_vectors_distinct ? "yes" : "no") << "\n";
      t << "candidate valid: " << (r.is_candidate_valid ? "yes" : "no") << "\n";
      emit(Json{{"summands", sums},
                {"ext", r.ext_vanishing},
                {"dimension_vectors_distinct", r.dimension_vectors_distinct},
                {"is_candidate_valid", r.is_candidate_valid}},
           t.str());
      if (!r.is_candidate_valid) throw ValidationError("candidate fails the checks");
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 3;
  }
  try {
    action();
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace tiltlab
