#include "tiltlab/homology.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "tiltlab/error.hpp"
#include "tiltlab/forms.hpp"
#include "tiltlab/linalg.hpp"

namespace tiltlab {

Representation projective_sum(const BoundQuiverAlgebra& a, const std::vector<int>& vertices) {
  std::vector<Representation> parts;
  for (int v : vertices) parts.push_back(projective_rep(a, v));
  return direct_sum(a, parts);
}

Representation injective_sum(const BoundQuiverAlgebra& a, const std::vector<int>& vertices) {
  std::vector<Representation> parts;
  for (int v : vertices) parts.push_back(injective_rep(a, v));
  return direct_sum(a, parts);
}

namespace {

// offsets[s] = start of summand s inside the space at vertex w.
std::vector<std::size_t> offsets_at(const std::vector<std::size_t>& sizes) {
  std::vector<std::size_t> off(sizes.size() + 1, 0);
  for (std::size_t s = 0; s < sizes.size(); ++s) off[s + 1] = off[s] + sizes[s];
  return off;
}

}  // namespace

RepMorphism projective_map(const BoundQuiverAlgebra& a, const std::vector<int>& from, const std::vector<int>& to,
                           const AlgebraMatrix& m) {
  RepMorphism f;
  for (std::size_t w = 0; w < a.size(); ++w) {
    const int W = static_cast<int>(w);
    std::vector<std::size_t> fs, ts;
    for (int u : from) fs.push_back(a.dim(u, W));
    for (int v : to) ts.push_back(a.dim(v, W));
    auto fo = offsets_at(fs), to_off = offsets_at(ts);
    RatMatrix mat(to_off.back(), fo.back());
    for (std::size_t r = 0; r < to.size(); ++r)
      for (std::size_t c = 0; c < from.size(); ++c) {
        const AlgebraElement& lam = m[r][c];
        if (lam.is_zero()) continue;
        const auto& paths = a.basis(from[c], W);
        for (std::size_t p = 0; p < paths.size(); ++p)
          for (const auto& [mu, coef] : lam.terms) {
            auto coords = a.product_coordinates(mu, paths[p]);
            for (std::size_t i = 0; i < coords.size(); ++i)
              if (coords[i] != 0) mat(to_off[r] + i, fo[c] + p) += coef * coords[i];
          }
      }
    f.components.push_back(std::move(mat));
  }
  return f;
}

RepMorphism nakayama_map(const BoundQuiverAlgebra& a, const std::vector<int>& from, const std::vector<int>& to,
                         const AlgebraMatrix& m) {
  RepMorphism f;
  for (std::size_t w = 0; w < a.size(); ++w) {
    const int W = static_cast<int>(w);
    std::vector<std::size_t> fs, ts;
    for (int u : from) fs.push_back(a.dim(W, u));
    for (int v : to) ts.push_back(a.dim(W, v));
    auto fo = offsets_at(fs), to_off = offsets_at(ts);
    RatMatrix mat(to_off.back(), fo.back());
    for (std::size_t r = 0; r < to.size(); ++r)
      for (std::size_t c = 0; c < from.size(); ++c) {
        const AlgebraElement& lam = m[r][c];
        if (lam.is_zero()) continue;
        // Row μ (basis path w -> to[r]), column p* (p: w -> from[c]):
        // the coefficient of p in μ·λ.
        const auto& mus = a.basis(W, to[r]);
        for (std::size_t i = 0; i < mus.size(); ++i)
          for (const auto& [path, coef] : lam.terms) {
            auto coords = a.product_coordinates(mus[i], path);
            for (std::size_t p = 0; p < coords.size(); ++p)
              if (coords[p] != 0) mat(to_off[r] + i, fo[c] + p) += coef * coords[p];
          }
      }
    f.components.push_back(std::move(mat));
  }
  return f;
}

DimensionVector Resolution::multiplicities(std::size_t j, std::size_t vertex_count) const {
  DimensionVector m(vertex_count, 0);
  if (j < terms.size())
    for (int v : terms[j]) ++m[v];
  return m;
}

namespace {

struct Generator {
  int vertex;
  std::vector<Rational> vec;
};

// Lifts of a basis of the top X/XJ, vertex by vertex.
std::vector<Generator> top_generators(const BoundQuiverAlgebra& a, const Representation& x) {
  const Quiver& q = a.quiver();
  std::vector<Generator> gens;
  for (std::size_t v = 0; v < a.size(); ++v) {
    const std::size_t d = x.dims[v];
    if (d == 0) continue;
    std::vector<RatMatrix> images;
    for (int e : q.arrows_to(static_cast<int>(v))) images.push_back(x.maps[e].transpose());
    RowEchelon ech = rref(vstack(images, d));
    std::vector<bool> pivot(d, false);
    for (auto p : ech.pivots) pivot[p] = true;
    for (std::size_t j = 0; j < d; ++j)
      if (!pivot[j]) {
        std::vector<Rational> e(d);
        e[j] = 1;
        gens.push_back({static_cast<int>(v), std::move(e)});
      }
  }
  return gens;
}

// Functionals on X_v restricting to a basis of D(soc X)_v.
std::vector<Generator> socle_functionals(const BoundQuiverAlgebra& a, const Representation& x) {
  const Quiver& q = a.quiver();
  std::vector<Generator> funcs;
  for (std::size_t v = 0; v < a.size(); ++v) {
    const std::size_t d = x.dims[v];
    if (d == 0) continue;
    std::vector<RatMatrix> outs;
    for (int e : q.arrows_from(static_cast<int>(v))) outs.push_back(x.maps[e]);
    std::vector<std::size_t> frees;
    kernel_matrix(vstack(outs, d), &frees);
    for (std::size_t f : frees) {
      std::vector<Rational> e(d);
      e[f] = 1;
      funcs.push_back({static_cast<int>(v), std::move(e)});
    }
  }
  return funcs;
}

bool unit_free(const AlgebraMatrix& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      for (const auto& [p, c] : x.terms)
        if (p.arrows.empty()) return false;
  return true;
}

std::vector<Rational> apply_row(const std::vector<Rational>& phi, const RatMatrix& m) {
  std::vector<Rational> out(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (phi[i] != 0 && m(i, j) != 0) out[j] += phi[i] * m(i, j);
  return out;
}

}  // namespace

Resolution minimal_projective_resolution(const BoundQuiverAlgebra& a, const Representation& x, std::size_t maxlen,
                                         bool truncate) {
  Resolution res;
  res.kind = Resolution::Kind::Projective;
  Representation cur = x;
  RepMorphism cur_incl;  // cur -> previous term
  std::vector<int> prev;
  for (std::size_t j = 0;; ++j) {
    std::vector<Generator> gens = top_generators(a, cur);
    if (gens.empty()) break;
    if (j > maxlen) {
      if (truncate) {
        res.complete = false;
        break;
      }
      throw ComputationError("projective resolution longer than " + std::to_string(maxlen));
    }
    std::vector<int> verts;
    for (const auto& g : gens) verts.push_back(g.vertex);
    // Cover ⊕P_v -> cur sending e_v to the generator.
    RepMorphism cover;
    for (std::size_t w = 0; w < a.size(); ++w) {
      const int W = static_cast<int>(w);
      std::size_t cols = 0;
      for (int v : verts) cols += a.dim(v, W);
      RatMatrix m(cur.dims[w], cols);
      std::size_t c = 0;
      for (const auto& g : gens)
        for (const Path& p : a.basis(g.vertex, W)) {
          auto image = path_action(a, cur, p).apply(g.vec);
          for (std::size_t i = 0; i < image.size(); ++i) m(i, c) = image[i];
          ++c;
        }
      cover.components.push_back(std::move(m));
    }
    if (j > 0) {
      AlgebraMatrix d(prev.size(), std::vector<AlgebraElement>(gens.size()));
      for (std::size_t g = 0; g < gens.size(); ++g) {
        const int v = gens[g].vertex;
        auto ambient = cur_incl.components[v].apply(gens[g].vec);
        std::size_t off = 0;
        for (std::size_t r = 0; r < prev.size(); ++r) {
          const std::size_t len = a.dim(prev[r], v);
          std::vector<Rational> coords(ambient.begin() + off, ambient.begin() + off + len);
          d[r][g] = a.from_coordinates(prev[r], v, coords);
          off += len;
        }
      }
      if (!unit_free(d)) res.minimal = false;
      res.differentials.push_back(std::move(d));
      res.maps.push_back(compose(cur_incl, cover));
    }
    Representation term = projective_sum(a, verts);
    SubRepresentation k = kernel(a, term, cover);
    res.terms.push_back(verts);
    cur = std::move(k.rep);
    cur_incl = std::move(k.inclusion);
    prev = std::move(verts);
  }
  return res;
}

Resolution minimal_injective_resolution(const BoundQuiverAlgebra& a, const Representation& x, std::size_t maxlen,
                                        bool truncate) {
  Resolution res;
  res.kind = Resolution::Kind::Injective;
  Representation cur = x;
  RepMorphism cur_proj;  // previous term -> cur
  std::vector<int> prev;
  for (std::size_t j = 0;; ++j) {
    std::vector<Generator> funcs = socle_functionals(a, cur);
    if (funcs.empty()) break;
    if (j > maxlen) {
      if (truncate) {
        res.complete = false;
        break;
      }
      throw ComputationError("injective resolution longer than " + std::to_string(maxlen));
    }
    std::vector<int> verts;
    for (const auto& f : funcs) verts.push_back(f.vertex);
    // Envelope cur -> ⊕I_v: x in cur_w goes to (p* ↦ φ(x·p)).
    RepMorphism env;
    for (std::size_t w = 0; w < a.size(); ++w) {
      const int W = static_cast<int>(w);
      std::size_t rows = 0;
      for (int v : verts) rows += a.dim(W, v);
      RatMatrix m(rows, cur.dims[w]);
      std::size_t r = 0;
      for (const auto& f : funcs)
        for (const Path& p : a.basis(W, f.vertex)) {
          auto row = apply_row(f.vec, path_action(a, cur, p));
          for (std::size_t i = 0; i < row.size(); ++i) m(r, i) = row[i];
          ++r;
        }
      env.components.push_back(std::move(m));
    }
    if (j > 0) {
      AlgebraMatrix d(funcs.size(), std::vector<AlgebraElement>(prev.size()));
      for (std::size_t g = 0; g < funcs.size(); ++g) {
        const int v = funcs[g].vertex;
        auto lifted = apply_row(funcs[g].vec, cur_proj.components[v]);
        std::size_t off = 0;
        for (std::size_t c = 0; c < prev.size(); ++c) {
          const std::size_t len = a.dim(v, prev[c]);
          std::vector<Rational> coords(lifted.begin() + off, lifted.begin() + off + len);
          d[g][c] = a.from_coordinates(v, prev[c], coords);
          off += len;
        }
      }
      if (!unit_free(d)) res.minimal = false;
      res.differentials.push_back(std::move(d));
      res.maps.push_back(compose(env, cur_proj));
    }
    Representation term = injective_sum(a, verts);
    QuotientRepresentation c = cokernel(a, term, env);
    res.terms.push_back(verts);
    cur = std::move(c.rep);
    cur_proj = std::move(c.projection);
    prev = std::move(verts);
  }
  return res;
}

std::size_t ext_dim(const BoundQuiverAlgebra& a, const Representation& x, const Representation& y, std::size_t j) {
  Resolution res = minimal_projective_resolution(a, x, j + 1, true);
  if (j >= res.terms.size()) return 0;
  auto cochain_dim = [&](std::size_t i) {
    std::size_t s = 0;
    for (int u : res.terms[i]) s += y.dims[u];
    return s;
  };
  // δ^i : Hom(P_i, Y) -> Hom(P_{i+1}, Y) built from d_{i+1}.
  auto delta_rank = [&](std::size_t i) -> std::size_t {
    if (i + 1 >= res.terms.size()) return 0;
    const auto& src = res.terms[i];
    const auto& dst = res.terms[i + 1];
    const AlgebraMatrix& d = res.differentials[i];
    std::vector<std::size_t> so, dof;
    for (int w : src) so.push_back(y.dims[w]);
    for (int u : dst) dof.push_back(y.dims[u]);
    auto sof = offsets_at(so), dofs = offsets_at(dof);
    RatMatrix m(dofs.back(), sof.back());
    for (std::size_t r = 0; r < src.size(); ++r)
      for (std::size_t c = 0; c < dst.size(); ++c)
        if (!d[r][c].is_zero()) m.set_block(dofs[c], sof[r], element_action(a, y, d[r][c]));
    return rank(m);
  };
  std::size_t dim = cochain_dim(j) - delta_rank(j);
  if (j > 0) dim -= delta_rank(j - 1);
  return dim;
}

std::size_t projective_dimension(const BoundQuiverAlgebra& a, const Representation& x) {
  return minimal_projective_resolution(a, x, a.size() + 1).length();
}

std::size_t injective_dimension(const BoundQuiverAlgebra& a, const Representation& x) {
  return minimal_injective_resolution(a, x, a.size() + 1).length();
}

std::size_t global_dimension(const BoundQuiverAlgebra& a) {
  std::size_t g = 0;
  for (std::size_t v = 0; v < a.size(); ++v)
    g = std::max(g, projective_dimension(a, simple_rep(a, static_cast<int>(v))));
  return g;
}

Representation tau_n(const BoundQuiverAlgebra& a, const Representation& x) {
  const std::size_t n = static_cast<std::size_t>(a.n());
  if (n == 0) throw ValidationError("tau_n needs n >= 1");
  Resolution res = minimal_projective_resolution(a, x, n, true);
  if (res.terms.size() <= n) return zero_representation(a);
  const auto& from = res.terms[n];
  const auto& to = res.terms[n - 1];
  RepMorphism f = nakayama_map(a, from, to, res.differentials[n - 1]);
  return kernel(a, injective_sum(a, from), f).rep;
}

Representation tau_n_minus(const BoundQuiverAlgebra& a, const Representation& x) {
  const std::size_t n = static_cast<std::size_t>(a.n());
  if (n == 0) throw ValidationError("tau_n needs n >= 1");
  Resolution res = minimal_injective_resolution(a, x, n, true);
  if (res.terms.size() <= n) return zero_representation(a);
  const auto& from = res.terms[n - 1];
  const auto& to = res.terms[n];
  RepMorphism f = projective_map(a, from, to, res.differentials[n - 1]);
  return cokernel(a, projective_sum(a, to), f).rep;
}

NClusterTiltingReport verify_n_cluster_tilting(const BoundQuiverAlgebra& a, std::size_t cap) {
  const std::size_t l = a.size();
  if (cap == 0) cap = 10 * l * coxeter(a).order;
  NClusterTiltingReport rep;
  std::size_t steps = 0;
  for (std::size_t i = 0; i < l; ++i) {
    Representation x = projective_rep(a, static_cast<int>(i));
    for (std::size_t u = 0; !x.is_zero(); ++u) {
      if (++steps > cap) throw ComputationError("tau_n^- iteration exceeded cap " + std::to_string(cap));
      check_representation(a, x);
      rep.summands.push_back({static_cast<int>(i), u, x});
      rep.dimension_vectors.push_back(x.dimension_vector());
      if (a.n() == 0) break;
      x = tau_n_minus(a, x);
    }
  }
  std::set<DimensionVector> distinct(rep.dimension_vectors.begin(), rep.dimension_vectors.end());
  rep.dimension_vectors_distinct = distinct.size() == rep.dimension_vectors.size();
  bool vanish = true;
  for (int j = 1; j < a.n(); ++j) {
    std::size_t total = 0;
    for (const auto& s : rep.summands)
      for (const auto& t : rep.summands) total += ext_dim(a, s.module, t.module, static_cast<std::size_t>(j));
    rep.ext_vanishing.push_back(total);
    if (total != 0) vanish = false;
  }
  rep.is_candidate_valid = vanish && rep.dimension_vectors_distinct;
  return rep;
}

}  // namespace tiltlab
