#include "tiltlab/representation.hpp"

#include <string>

#include "tiltlab/error.hpp"
#include "tiltlab/linalg.hpp"

namespace tiltlab {

DimensionVector Representation::dimension_vector() const {
  return DimensionVector(dims.begin(), dims.end());
}

std::size_t Representation::total_dimension() const {
  std::size_t s = 0;
  for (auto d : dims) s += d;
  return s;
}

Representation zero_representation(const BoundQuiverAlgebra& a) {
  Representation x;
  x.dims.assign(a.size(), 0);
  x.maps.assign(a.quiver().arrow_count(), RatMatrix());
  return x;
}

Representation simple_rep(const BoundQuiverAlgebra& a, int v) {
  Representation x = zero_representation(a);
  x.dims[v] = 1;
  const Quiver& q = a.quiver();
  for (std::size_t e = 0; e < q.arrow_count(); ++e)
    x.maps[e] = RatMatrix(x.dims[q.arrow(e).target], x.dims[q.arrow(e).source]);
  return x;
}

Representation projective_rep(const BoundQuiverAlgebra& a, int i) {
  const Quiver& q = a.quiver();
  Representation x;
  for (std::size_t v = 0; v < a.size(); ++v) x.dims.push_back(a.dim(i, static_cast<int>(v)));
  for (std::size_t e = 0; e < q.arrow_count(); ++e) {
    const Arrow& ar = q.arrow(e);
    RatMatrix m(x.dims[ar.target], x.dims[ar.source]);
    const Path step{ar.source, ar.target, {static_cast<int>(e)}};
    const auto& from = a.basis(i, ar.source);
    for (std::size_t c = 0; c < from.size(); ++c) {
      auto coords = a.product_coordinates(from[c], step);
      for (std::size_t r = 0; r < coords.size(); ++r) m(r, c) = coords[r];
    }
    x.maps.push_back(std::move(m));
  }
  return x;
}

Representation injective_rep(const BoundQuiverAlgebra& a, int i) {
  const Quiver& q = a.quiver();
  Representation x;
  for (std::size_t v = 0; v < a.size(); ++v) x.dims.push_back(a.dim(static_cast<int>(v), i));
  for (std::size_t e = 0; e < q.arrow_count(); ++e) {
    const Arrow& ar = q.arrow(e);
    RatMatrix m(x.dims[ar.target], x.dims[ar.source]);
    const Path step{ar.source, ar.target, {static_cast<int>(e)}};
    const auto& to = a.basis(ar.target, i);
    // (f·a)(q) = f(a q): row q, column p holds the coefficient of p in a·q.
    for (std::size_t r = 0; r < to.size(); ++r) {
      auto coords = a.product_coordinates(step, to[r]);
      for (std::size_t c = 0; c < coords.size(); ++c) m(r, c) = coords[c];
    }
    x.maps.push_back(std::move(m));
  }
  return x;
}

Representation direct_sum(const BoundQuiverAlgebra& a, const std::vector<Representation>& parts) {
  const Quiver& q = a.quiver();
  Representation x = zero_representation(a);
  for (const auto& p : parts)
    for (std::size_t v = 0; v < a.size(); ++v) x.dims[v] += p.dims[v];
  for (std::size_t e = 0; e < q.arrow_count(); ++e) {
    const Arrow& ar = q.arrow(e);
    RatMatrix m(x.dims[ar.target], x.dims[ar.source]);
    std::size_t r = 0, c = 0;
    for (const auto& p : parts) {
      m.set_block(r, c, p.maps[e]);
      r += p.dims[ar.target];
      c += p.dims[ar.source];
    }
    x.maps[e] = std::move(m);
  }
  return x;
}

RatMatrix path_action(const BoundQuiverAlgebra& a, const Representation& x, const Path& p) {
  RatMatrix m = RatMatrix::identity(x.dims[p.source]);
  for (int e : p.arrows) m = x.maps[e] * m;
  (void)a;
  return m;
}

RatMatrix element_action(const BoundQuiverAlgebra& a, const Representation& x, const AlgebraElement& e) {
  RatMatrix m(x.dims[e.target], x.dims[e.source]);
  for (const auto& [p, c] : e.terms) m += path_action(a, x, p).scaled(c);
  return m;
}

void check_representation(const BoundQuiverAlgebra& a, const Representation& x) {
  const Quiver& q = a.quiver();
  if (x.dims.size() != a.size()) throw ValidationError("representation has the wrong number of vertices");
  if (x.maps.size() != q.arrow_count()) throw ValidationError("representation has the wrong number of arrow maps");
  for (std::size_t e = 0; e < q.arrow_count(); ++e) {
    const Arrow& ar = q.arrow(e);
    if (x.maps[e].rows() != x.dims[ar.target] || x.maps[e].cols() != x.dims[ar.source])
      throw ValidationError("map of arrow \"" + ar.name + "\" has the wrong shape");
  }
  for (std::size_t r = 0; r < a.relations().size(); ++r)
    if (!element_action(a, x, a.relations()[r]).is_zero())
      throw ValidationError("representation violates relation " + std::to_string(r + 1));
}

bool is_representation(const BoundQuiverAlgebra& a, const Representation& x) {
  try {
    check_representation(a, x);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

bool is_morphism(const BoundQuiverAlgebra& a, const Representation& x, const Representation& y, const RepMorphism& f) {
  const Quiver& q = a.quiver();
  if (f.components.size() != a.size()) return false;
  for (std::size_t v = 0; v < a.size(); ++v)
    if (f.components[v].rows() != y.dims[v] || f.components[v].cols() != x.dims[v]) return false;
  for (std::size_t e = 0; e < q.arrow_count(); ++e) {
    const Arrow& ar = q.arrow(e);
    if (f.components[ar.target] * x.maps[e] != y.maps[e] * f.components[ar.source]) return false;
  }
  return true;
}

RepMorphism identity_morphism(const Representation& x) {
  RepMorphism f;
  for (auto d : x.dims) f.components.push_back(RatMatrix::identity(d));
  return f;
}

RepMorphism compose(const RepMorphism& g, const RepMorphism& f) {
  RepMorphism h;
  for (std::size_t v = 0; v < f.components.size(); ++v) h.components.push_back(g.components[v] * f.components[v]);
  return h;
}

SubRepresentation kernel(const BoundQuiverAlgebra& a, const Representation& x, const RepMorphism& f) {
  const Quiver& q = a.quiver();
  SubRepresentation k;
  std::vector<std::vector<std::size_t>> frees(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) {
    RatMatrix b = kernel_matrix(f.components[v], &frees[v]);
    k.rep.dims.push_back(b.cols());
    k.inclusion.components.push_back(std::move(b));
  }
  // The basis is the identity on the free rows, so restricting to them
  // recovers coordinates.
  for (std::size_t e = 0; e < q.arrow_count(); ++e) {
    const Arrow& ar = q.arrow(e);
    RatMatrix image = x.maps[e] * k.inclusion.components[ar.source];
    RatMatrix m(k.rep.dims[ar.target], k.rep.dims[ar.source]);
    const auto& fr = frees[ar.target];
    for (std::size_t r = 0; r < fr.size(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = image(fr[r], c);
    k.rep.maps.push_back(std::move(m));
  }
  return k;
}

QuotientRepresentation cokernel(const BoundQuiverAlgebra& a, const Representation& y, const RepMorphism& f) {
  const Quiver& q = a.quiver();
  QuotientRepresentation c;
  std::vector<std::vector<std::size_t>> frees(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) {
    RatMatrix left = kernel_matrix(f.components[v].transpose(), &frees[v]);
    c.rep.dims.push_back(left.cols());
    c.projection.components.push_back(left.transpose());
  }
  for (std::size_t e = 0; e < q.arrow_count(); ++e) {
    const Arrow& ar = q.arrow(e);
    RatMatrix pushed = c.projection.components[ar.target] * y.maps[e];
    RatMatrix m(c.rep.dims[ar.target], c.rep.dims[ar.source]);
    const auto& fr = frees[ar.source];
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t t = 0; t < fr.size(); ++t) m(r, t) = pushed(r, fr[t]);
    c.rep.maps.push_back(std::move(m));
  }
  return c;
}

Representation dual(const Representation& x) {
  Representation d;
  d.dims = x.dims;
  for (const auto& m : x.maps) d.maps.push_back(m.transpose());
  return d;
}

std::vector<RepMorphism> hom_basis(const BoundQuiverAlgebra& a, const Representation& x, const Representation& y) {
  const Quiver& q = a.quiver();
  const std::size_t l = a.size();
  std::vector<std::size_t> offset(l + 1, 0);
  for (std::size_t v = 0; v < l; ++v) offset[v + 1] = offset[v] + y.dims[v] * x.dims[v];
  const std::size_t unknowns = offset[l];
  auto var = [&](std::size_t v, std::size_t r, std::size_t c) { return offset[v] + r * x.dims[v] + c; };
  std::size_t eqs = 0;
  for (std::size_t e = 0; e < q.arrow_count(); ++e)
    eqs += y.dims[q.arrow(e).target] * x.dims[q.arrow(e).source];
  RatMatrix sys(eqs, unknowns);
  std::size_t row = 0;
  for (std::size_t e = 0; e < q.arrow_count(); ++e) {
    const std::size_t s = q.arrow(e).source, t = q.arrow(e).target;
    const RatMatrix& mx = x.maps[e];
    const RatMatrix& my = y.maps[e];
    // (F_t M^X - M^Y F_s)(i, j) = 0
    for (std::size_t i = 0; i < y.dims[t]; ++i)
      for (std::size_t j = 0; j < x.dims[s]; ++j, ++row) {
        for (std::size_t k = 0; k < x.dims[t]; ++k)
          if (mx(k, j) != 0) sys(row, var(t, i, k)) += mx(k, j);
        for (std::size_t k = 0; k < y.dims[s]; ++k)
          if (my(i, k) != 0) sys(row, var(s, k, j)) -= my(i, k);
      }
  }
  RatMatrix ker = kernel_matrix(sys);
  std::vector<RepMorphism> out;
  for (std::size_t t = 0; t < ker.cols(); ++t) {
    RepMorphism f;
    for (std::size_t v = 0; v < l; ++v) {
      RatMatrix m(y.dims[v], x.dims[v]);
      for (std::size_t r = 0; r < y.dims[v]; ++r)
        for (std::size_t c = 0; c < x.dims[v]; ++c) m(r, c) = ker(var(v, r, c), t);
      f.components.push_back(std::move(m));
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::size_t hom_dimension(const BoundQuiverAlgebra& a, const Representation& x, const Representation& y) {
  return hom_basis(a, x, y).size();
}

namespace {

bool invertible(const RepMorphism& f) {
  for (const auto& m : f.components)
    if (m.rows() != m.cols() || rank(m) != m.rows()) return false;
  return true;
}

RepMorphism combination(const std::vector<RepMorphism>& basis, const std::vector<long long>& coeffs) {
  RepMorphism f = basis.front();
  for (auto& m : f.components) m = m.scaled(to_rational(coeffs[0]));
  for (std::size_t i = 1; i < basis.size(); ++i)
    for (std::size_t v = 0; v < f.components.size(); ++v)
      if (coeffs[i] != 0) f.components[v] += basis[i].components[v].scaled(to_rational(coeffs[i]));
  return f;
}

}  // namespace

std::optional<RepMorphism> find_isomorphism(const BoundQuiverAlgebra& a, const Representation& x,
                                            const Representation& y, std::mt19937_64& rng) {
  if (x.dims != y.dims) return std::nullopt;
  if (x.is_zero()) return identity_morphism(x);
  auto basis = hom_basis(a, x, y);
  if (basis.empty()) return std::nullopt;
  const std::size_t k = basis.size();
  std::uniform_int_distribution<long long> coeff(-7, 7);
  for (int attempt = 0; attempt < 5; ++attempt) {
    std::vector<long long> c(k);
    for (auto& v : c) v = coeff(rng);
    RepMorphism f = combination(basis, c);
    if (invertible(f)) return f;
  }
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<long long> c(k, 0);
    c[i] = 1;
    RepMorphism f = combination(basis, c);
    if (invertible(f)) return f;
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      std::vector<long long> c(k, 0);
      c[i] = 1;
      c[j] = 1;
      RepMorphism f = combination(basis, c);
      if (invertible(f)) return f;
    }
  std::vector<long long> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = static_cast<long long>(i + 1);
  RepMorphism f = combination(basis, c);
  if (invertible(f)) return f;
  return std::nullopt;
}

Representation pull_back(const AlgebraIsomorphism& iso, const Representation& y) {
  Representation x;
  x.dims = y.dims;
  for (std::size_t e = 0; e < iso.arrow_map.size(); ++e) x.maps.push_back(y.maps[iso.arrow_map[e]].scaled(iso.scale[e]));
  return x;
}

Representation push_forward(const AlgebraIsomorphism& iso, const Representation& x) {
  Representation y;
  y.dims = x.dims;
  y.maps.resize(iso.arrow_map.size());
  for (std::size_t e = 0; e < iso.arrow_map.size(); ++e) y.maps[iso.arrow_map[e]] = x.maps[e].scaled(1 / iso.scale[e]);
  return y;
}

}  // namespace tiltlab
