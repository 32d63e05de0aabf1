#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tiltlab/matrix.hpp"
#include "tiltlab/quiver.hpp"

namespace tiltlab {

// A linear combination of parallel paths from `source` to `target`.
struct AlgebraElement {
  int source = 0;
  int target = 0;
  std::map<Path, Rational> terms;  // no zero coefficients

  AlgebraElement() = default;
  AlgebraElement(int s, int t) : source(s), target(t) {}
  static AlgebraElement of_path(const Path& p, const Rational& c = 1);

  bool is_zero() const { return terms.empty(); }
  void add(const Path& p, const Rational& c);
  AlgebraElement scaled(const Rational& c) const;
  bool operator==(const AlgebraElement& o) const {
    return source == o.source && target == o.target && terms == o.terms;
  }
};

// KQ/(R) for a finite acyclic quiver, with a fixed normal-form basis.
// Copies are cheap and share the cached basis data.
class BoundQuiverAlgebra {
 public:
  BoundQuiverAlgebra() = default;
  // Checks that relations are nonzero, homogeneous and inside J^2; throws
  // ValidationError otherwise. Throws on directed cycles.
  BoundQuiverAlgebra(Quiver quiver, int n, std::vector<AlgebraElement> relations);

  const Quiver& quiver() const { return data_->quiver; }
  std::size_t size() const { return data_->quiver.vertex_count(); }
  int n() const { return data_->n; }
  const std::vector<AlgebraElement>& relations() const { return data_->relations; }

  // Basis paths from u to v; they span e_u Λ e_v.
  const std::vector<Path>& basis(int u, int v) const { return block(u, v).basis; }
  std::size_t dim(int u, int v) const { return block(u, v).basis.size(); }
  std::vector<Path> path_basis() const;  // all basis paths in path order
  std::size_t dimension() const;

  // Coordinates over basis(source, target).
  std::vector<Rational> coordinates(const Path& p) const;
  std::vector<Rational> coordinates(const AlgebraElement& x) const;
  // Coordinates of the product p·q of two paths.
  std::vector<Rational> product_coordinates(const Path& p, const Path& q) const;
  AlgebraElement from_coordinates(int u, int v, const std::vector<Rational>& c) const;

  AlgebraElement normal_form(const AlgebraElement& x) const;
  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;
  bool in_ideal(const AlgebraElement& x) const { return normal_form(x).is_zero(); }

  // Column j is the dimension vector of P_j: entry (i,j) = dim e_j Λ e_i.
  const IntMatrix& cartan() const { return data_->cartan; }

  // Opposite algebra on the opposite quiver (arrow names kept).
  BoundQuiverAlgebra opposite() const;

 private:
  struct Block {
    std::vector<Path> paths;                    // every path u -> v, sorted
    std::map<std::vector<int>, std::size_t> index;  // arrow sequence -> position in paths
    std::vector<Path> basis;
    std::vector<std::vector<Rational>> reduction;  // per path: coordinates over basis
  };
  struct Data {
    Quiver quiver;
    int n = 0;
    std::vector<AlgebraElement> relations;
    std::vector<Block> blocks;  // index u * l + v
    IntMatrix cartan;
  };
  const Block& block(int u, int v) const { return data_->blocks[u * size() + v]; }
  std::shared_ptr<const Data> data_;
};

Path reverse_path(const Path& p);
AlgebraElement reverse_element(const AlgebraElement& x);

// Span of {p·r·q} restricted to the paths from u to v, as rows over
// all_paths(u, v). `proper_only` drops the generators with p, q both trivial.
RatMatrix ideal_generators(const Quiver& q, const std::vector<AlgebraElement>& relations, int u, int v,
                           bool proper_only);

struct ValidationReport {
  bool acyclic = false;
  bool connected = false;
  bool relations_in_J2 = false;
  bool relations_minimal = false;
  bool labeling_admissible = false;
  std::vector<int> admissible_ordering;
  bool ok() const { return acyclic && connected && relations_in_J2 && relations_minimal && labeling_admissible; }
};

ValidationReport validate(const BoundQuiverAlgebra& a);

// Label-preserving identification of two bound quivers: arrow x of A goes to
// scale[x] times arrow arrow_map[x] of B, and the ideals correspond.
struct AlgebraIsomorphism {
  std::vector<int> arrow_map;
  std::vector<Rational> scale;
};

// Parallel arrows are matched in name order; only the arrow scalars are
// searched for. Returns nullopt when no such identification exists.
std::optional<AlgebraIsomorphism> match_bound_quivers(const BoundQuiverAlgebra& a, const BoundQuiverAlgebra& b);

AlgebraElement map_element(const AlgebraIsomorphism& iso, const AlgebraElement& x);

}  // namespace tiltlab
