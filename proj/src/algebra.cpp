#include "tiltlab/algebra.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "tiltlab/error.hpp"
#include "tiltlab/linalg.hpp"

namespace tiltlab {

AlgebraElement AlgebraElement::of_path(const Path& p, const Rational& c) {
  AlgebraElement x(p.source, p.target);
  x.add(p, c);
  return x;
}

void AlgebraElement::add(const Path& p, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

AlgebraElement AlgebraElement::scaled(const Rational& c) const {
  AlgebraElement x(source, target);
  if (c == 0) return x;
  for (const auto& [p, v] : terms) x.terms.emplace(p, v * c);
  return x;
}

namespace {

// Incrementally maintained reduced row echelon basis of a row space.
class Echelon {
 public:
  explicit Echelon(std::size_t cols) : cols_(cols) {}

  // Returns true if v enlarged the span.
  bool insert(std::vector<Rational> v) {
    for (const auto& [p, row] : rows_) {
      if (v[p] == 0) continue;
      Rational f = v[p];
      for (std::size_t j = p; j < cols_; ++j) v[j] -= f * row[j];
    }
    std::size_t p = 0;
    while (p < cols_ && v[p] == 0) ++p;
    if (p == cols_) return false;
    Rational inv = 1 / v[p];
    for (std::size_t j = p; j < cols_; ++j) v[j] *= inv;
    for (auto& [q, row] : rows_) {
      if (row[p] == 0) continue;
      Rational f = row[p];
      for (std::size_t j = p; j < cols_; ++j) row[j] -= f * v[j];
    }
    rows_.emplace(p, std::move(v));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == cols_; }
  const std::map<std::size_t, std::vector<Rational>>& rows() const { return rows_; }

 private:
  std::size_t cols_;
  std::map<std::size_t, std::vector<Rational>> rows_;  // pivot -> row
};

struct PathTable {
  std::vector<std::vector<std::vector<Path>>> paths;  // [u][v] sorted
  std::vector<std::vector<std::map<std::vector<int>, std::size_t>>> index;
};

PathTable enumerate_paths(const Quiver& q) {
  const int l = static_cast<int>(q.vertex_count());
  PathTable t;
  t.paths.assign(l, std::vector<std::vector<Path>>(l));
  t.index.assign(l, std::vector<std::map<std::vector<int>, std::size_t>>(l));
  for (int u = 0; u < l; ++u) {
    Path cur = trivial_path(u);
    std::function<void(int)> dfs = [&](int v) {
      cur.target = v;
      t.paths[u][v].push_back(cur);
      for (int a : q.arrows_from(v)) {
        cur.arrows.push_back(a);
        dfs(q.arrow(a).target);
        cur.arrows.pop_back();
      }
    };
    dfs(u);
    for (int v = 0; v < l; ++v) {
      std::sort(t.paths[u][v].begin(), t.paths[u][v].end());
      for (std::size_t i = 0; i < t.paths[u][v].size(); ++i) t.index[u][v][t.paths[u][v][i].arrows] = i;
    }
  }
  return t;
}

// Calls emit(row) for every generator p·r·q of the ideal inside e_u KQ e_v.
// Rows are indexed by position in table.paths[u][v].
void for_each_generator(const PathTable& t, const std::vector<AlgebraElement>& relations, int u, int v,
                        bool proper_only, const std::function<bool(std::vector<Rational>)>& emit) {
  const std::size_t N = t.paths[u][v].size();
  for (const AlgebraElement& r : relations) {
    for (const Path& p : t.paths[u][r.source])
      for (const Path& q : t.paths[r.target][v]) {
        if (proper_only && p.arrows.empty() && q.arrows.empty()) continue;
        std::vector<Rational> row(N);
        for (const auto& [path, c] : r.terms) {
          std::vector<int> seq = p.arrows;
          seq.insert(seq.end(), path.arrows.begin(), path.arrows.end());
          seq.insert(seq.end(), q.arrows.begin(), q.arrows.end());
          row[t.index[u][v].at(seq)] += c;
        }
        if (!emit(std::move(row))) return;
      }
  }
}

void check_relation(const Quiver& q, const AlgebraElement& r) {
  if (r.terms.empty()) throw ValidationError("relation is zero");
  for (const auto& [p, c] : r.terms) {
    if (p.arrows.size() < 2) throw ValidationError("relation not in square of arrow ideal");
    if (p.source != r.source || p.target != r.target)
      throw ValidationError("relation not homogeneous in source/target");
    int at = p.source;
    for (int a : p.arrows) {
      if (a < 0 || static_cast<std::size_t>(a) >= q.arrow_count()) throw ValidationError("unknown arrow in relation");
      if (q.arrow(a).source != at) throw ValidationError("non-composable path in relation");
      at = q.arrow(a).target;
    }
    if (at != p.target) throw ValidationError("path does not end at its recorded target");
  }
}

}  // namespace

BoundQuiverAlgebra::BoundQuiverAlgebra(Quiver quiver, int n, std::vector<AlgebraElement> relations) {
  if (!quiver.acyclic()) throw ValidationError("directed cycle detected");
  if (n < 0) throw ValidationError("n must be nonnegative");
  for (const auto& r : relations) check_relation(quiver, r);
  auto d = std::make_shared<Data>();
  const int l = static_cast<int>(quiver.vertex_count());
  PathTable table = enumerate_paths(quiver);
  d->blocks.resize(static_cast<std::size_t>(l) * l);
  for (int u = 0; u < l; ++u)
    for (int v = 0; v < l; ++v) {
      Block& b = d->blocks[u * l + v];
      b.paths = table.paths[u][v];
      b.index = table.index[u][v];
      const std::size_t N = b.paths.size();
      // Columns in reverse path order, so pivots land on the latest paths and
      // the surviving (basis) paths are the greedy choice from the front.
      Echelon ech(N);
      for_each_generator(table, relations, u, v, false, [&](std::vector<Rational> row) {
        std::reverse(row.begin(), row.end());
        ech.insert(std::move(row));
        return !ech.full();
      });
      std::vector<long> pivot_row_of(N, -1);  // in path index
      std::vector<const std::vector<Rational>*> rows;
      for (const auto& [p, row] : ech.rows()) {
        pivot_row_of[N - 1 - p] = static_cast<long>(rows.size());
        rows.push_back(&row);
      }
      std::vector<long> basis_pos(N, -1);
      for (std::size_t i = 0; i < N; ++i)
        if (pivot_row_of[i] < 0) {
          basis_pos[i] = static_cast<long>(b.basis.size());
          b.basis.push_back(b.paths[i]);
        }
      const std::size_t B = b.basis.size();
      b.reduction.assign(N, std::vector<Rational>(B));
      for (std::size_t i = 0; i < N; ++i) {
        if (basis_pos[i] >= 0) {
          b.reduction[i][basis_pos[i]] = 1;
          continue;
        }
        const std::vector<Rational>& row = *rows[pivot_row_of[i]];
        for (std::size_t j = 0; j < N; ++j)
          if (basis_pos[j] >= 0 && row[N - 1 - j] != 0) b.reduction[i][basis_pos[j]] = -row[N - 1 - j];
      }
    }
  d->cartan = IntMatrix(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) d->cartan(i, j) = static_cast<unsigned long>(d->blocks[j * l + i].basis.size());
  d->quiver = std::move(quiver);
  d->n = n;
  d->relations = std::move(relations);
  data_ = std::move(d);
}

std::vector<Path> BoundQuiverAlgebra::path_basis() const {
  std::vector<Path> all;
  for (const Block& b : data_->blocks) all.insert(all.end(), b.basis.begin(), b.basis.end());
  std::sort(all.begin(), all.end());
  return all;
}

std::size_t BoundQuiverAlgebra::dimension() const {
  std::size_t s = 0;
  for (const Block& b : data_->blocks) s += b.basis.size();
  return s;
}

std::vector<Rational> BoundQuiverAlgebra::coordinates(const Path& p) const {
  const Block& b = block(p.source, p.target);
  return b.reduction[b.index.at(p.arrows)];
}

std::vector<Rational> BoundQuiverAlgebra::product_coordinates(const Path& p, const Path& q) const {
  const Block& b = block(p.source, q.target);
  std::vector<int> seq = p.arrows;
  seq.insert(seq.end(), q.arrows.begin(), q.arrows.end());
  return b.reduction[b.index.at(seq)];
}

std::vector<Rational> BoundQuiverAlgebra::coordinates(const AlgebraElement& x) const {
  const Block& b = block(x.source, x.target);
  std::vector<Rational> out(b.basis.size());
  for (const auto& [p, c] : x.terms) {
    const auto& red = b.reduction[b.index.at(p.arrows)];
    for (std::size_t i = 0; i < red.size(); ++i)
      if (red[i] != 0) out[i] += c * red[i];
  }
  return out;
}

AlgebraElement BoundQuiverAlgebra::from_coordinates(int u, int v, const std::vector<Rational>& c) const {
  const Block& b = block(u, v);
  AlgebraElement x(u, v);
  for (std::size_t i = 0; i < c.size(); ++i) x.add(b.basis[i], c[i]);
  return x;
}

AlgebraElement BoundQuiverAlgebra::normal_form(const AlgebraElement& x) const {
  return from_coordinates(x.source, x.target, coordinates(x));
}

AlgebraElement BoundQuiverAlgebra::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
  if (x.target != y.source) return AlgebraElement(x.source, y.target);
  std::vector<Rational> acc(dim(x.source, y.target));
  for (const auto& [p, c] : x.terms)
    for (const auto& [q, e] : y.terms) {
      auto red = product_coordinates(p, q);
      Rational f = c * e;
      for (std::size_t i = 0; i < red.size(); ++i)
        if (red[i] != 0) acc[i] += f * red[i];
    }
  return from_coordinates(x.source, y.target, acc);
}

Path reverse_path(const Path& p) {
  Path r{p.target, p.source, p.arrows};
  std::reverse(r.arrows.begin(), r.arrows.end());
  return r;
}

AlgebraElement reverse_element(const AlgebraElement& x) {
  AlgebraElement r(x.target, x.source);
  for (const auto& [p, c] : x.terms) r.terms.emplace(reverse_path(p), c);
  return r;
}

BoundQuiverAlgebra BoundQuiverAlgebra::opposite() const {
  std::vector<AlgebraElement> rels;
  for (const auto& r : relations()) rels.push_back(reverse_element(r));
  return BoundQuiverAlgebra(quiver().opposite(), n(), rels);
}

RatMatrix ideal_generators(const Quiver& q, const std::vector<AlgebraElement>& relations, int u, int v,
                           bool proper_only) {
  PathTable t = enumerate_paths(q);
  std::vector<std::vector<Rational>> rows;
  for_each_generator(t, relations, u, v, proper_only, [&](std::vector<Rational> row) {
    rows.push_back(std::move(row));
    return true;
  });
  RatMatrix m(rows.size(), t.paths[u][v].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

ValidationReport validate(const BoundQuiverAlgebra& a) {
  ValidationReport rep;
  const Quiver& q = a.quiver();
  rep.acyclic = q.acyclic();
  rep.connected = q.connected();
  rep.relations_in_J2 = true;
  for (const auto& r : a.relations())
    for (const auto& [p, c] : r.terms)
      if (p.arrows.size() < 2) rep.relations_in_J2 = false;
  // Minimality: the relations of each (source, target) block stay independent
  // modulo IJ + JI.
  rep.relations_minimal = true;
  PathTable t = enumerate_paths(q);
  std::map<std::pair<int, int>, std::vector<const AlgebraElement*>> by_block;
  for (const auto& r : a.relations()) by_block[{r.source, r.target}].push_back(&r);
  for (const auto& [uv, rels] : by_block) {
    auto [u, v] = uv;
    const std::size_t N = t.paths[u][v].size();
    Echelon ech(N);
    for_each_generator(t, a.relations(), u, v, true, [&](std::vector<Rational> row) {
      ech.insert(std::move(row));
      return !ech.full();
    });
    for (const AlgebraElement* r : rels) {
      std::vector<Rational> row(N);
      for (const auto& [p, c] : r->terms) row[t.index[u][v].at(p.arrows)] += c;
      if (!ech.insert(std::move(row))) rep.relations_minimal = false;
    }
  }
  std::vector<int> id(a.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  rep.labeling_admissible = is_admissible_ordering(q, id);
  rep.admissible_ordering = admissible_ordering(q);
  return rep;
}

AlgebraElement map_element(const AlgebraIsomorphism& iso, const AlgebraElement& x) {
  AlgebraElement y(x.source, x.target);
  for (const auto& [p, c] : x.terms) {
    Path m{p.source, p.target, {}};
    Rational f = c;
    for (int a : p.arrows) {
      m.arrows.push_back(iso.arrow_map[a]);
      f *= iso.scale[a];
    }
    y.add(m, f);
  }
  return y;
}

std::optional<AlgebraIsomorphism> match_bound_quivers(const BoundQuiverAlgebra& a, const BoundQuiverAlgebra& b) {
  const Quiver& qa = a.quiver();
  const Quiver& qb = b.quiver();
  if (qa.labels() != qb.labels() || qa.arrow_count() != qb.arrow_count() || a.n() != b.n()) return std::nullopt;
  if (a.cartan() != b.cartan()) return std::nullopt;
  const int l = static_cast<int>(qa.vertex_count());
  AlgebraIsomorphism iso;
  iso.arrow_map.assign(qa.arrow_count(), -1);
  iso.scale.assign(qa.arrow_count(), Rational(1));
  for (int s = 0; s < l; ++s) {
    std::map<int, std::vector<int>> ta, tb;
    for (int x : qa.arrows_from(s)) ta[qa.arrow(x).target].push_back(x);
    for (int x : qb.arrows_from(s)) tb[qb.arrow(x).target].push_back(x);
    if (ta.size() != tb.size()) return std::nullopt;
    for (auto& [t, xs] : ta) {
      auto it = tb.find(t);
      if (it == tb.end() || it->second.size() != xs.size()) return std::nullopt;
      for (std::size_t i = 0; i < xs.size(); ++i) iso.arrow_map[xs[i]] = it->second[i];
    }
  }
  // Scalars on a spanning forest can be absorbed by conjugation with a
  // diagonal unit, so only the remaining arrows carry unknowns.
  std::vector<bool> known(qa.arrow_count(), false);
  {
    std::vector<bool> seen(l, false);
    for (int root = 0; root < l; ++root) {
      if (seen[root]) continue;
      seen[root] = true;
      std::vector<int> stack{root};
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        auto step = [&](int x, int w) {
          if (!seen[w]) {
            seen[w] = true;
            known[x] = true;
            stack.push_back(w);
          }
        };
        for (int x : qa.arrows_from(v)) step(x, qa.arrow(x).target);
        for (int x : qa.arrows_to(v)) step(x, qa.arrow(x).source);
      }
    }
  }
  auto mapped_coords = [&](const Path& p) {
    Path m{p.source, p.target, {}};
    for (int x : p.arrows) m.arrows.push_back(iso.arrow_map[x]);
    return b.coordinates(m);
  };
  // Solve for one unknown at a time: a relation whose paths involve exactly
  // one unknown arrow gives  u + t * w = 0  in e_s B e_t.
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& r : a.relations()) {
      std::set<int> unknown;
      for (const auto& [p, c] : r.terms)
        for (int x : p.arrows)
          if (!known[x]) unknown.insert(x);
      if (unknown.size() != 1) continue;
      const int x = *unknown.begin();
      const std::size_t D = b.dim(r.source, r.target);
      std::vector<Rational> u(D), w(D);
      for (const auto& [p, c] : r.terms) {
        Rational f = c;
        bool has_x = false;
        for (int y : p.arrows) {
          if (y == x) has_x = true;
          else f *= iso.scale[y];
        }
        auto v = mapped_coords(p);
        auto& target = has_x ? w : u;
        for (std::size_t i = 0; i < D; ++i) target[i] += f * v[i];
      }
      std::size_t i = 0;
      while (i < D && w[i] == 0) ++i;
      if (i == D) continue;
      Rational t = -u[i] / w[i];
      if (t == 0) return std::nullopt;
      iso.scale[x] = t;
      known[x] = true;
      progress = true;
    }
  }
  std::vector<int> free_arrows;
  for (std::size_t x = 0; x < known.size(); ++x)
    if (!known[x]) free_arrows.push_back(static_cast<int>(x));
  auto all_relations_hold = [&]() {
    for (const auto& r : a.relations())
      if (!b.in_ideal(map_element(iso, r))) return false;
    return true;
  };
  // Leftover unknowns are tried with signs only.
  const std::size_t tries = free_arrows.size() > 12 ? 1 : (std::size_t{1} << free_arrows.size());
  for (std::size_t mask = 0; mask < tries; ++mask) {
    for (std::size_t i = 0; i < free_arrows.size(); ++i)
      iso.scale[free_arrows[i]] = (mask >> i & 1) ? Rational(-1) : Rational(1);
    if (all_relations_hold()) return iso;
  }
  return std::nullopt;
}

}  // namespace tiltlab
