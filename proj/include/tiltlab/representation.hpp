#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "tiltlab/algebra.hpp"
#include "tiltlab/matrix.hpp"

namespace tiltlab {

using DimensionVector = std::vector<long long>;

// Arrow a : i -> j acts by maps[a], a dims[j] x dims[i] matrix on column vectors.
struct Representation {
  std::vector<std::size_t> dims;
  std::vector<RatMatrix> maps;

  DimensionVector dimension_vector() const;
  std::size_t total_dimension() const;
  bool is_zero() const { return total_dimension() == 0; }
  bool operator==(const Representation& o) const { return dims == o.dims && maps == o.maps; }
};

// Vertexwise linear maps f_v : X_v -> Y_v.
struct RepMorphism {
  std::vector<RatMatrix> components;
};

Representation zero_representation(const BoundQuiverAlgebra& a);
Representation simple_rep(const BoundQuiverAlgebra& a, int v);
// Basis of (P_i)_v: basis paths i -> v, acting by extension on the right.
Representation projective_rep(const BoundQuiverAlgebra& a, int i);
// Basis of (I_i)_v: the dual basis of the basis paths v -> i.
Representation injective_rep(const BoundQuiverAlgebra& a, int i);
Representation direct_sum(const BoundQuiverAlgebra& a, const std::vector<Representation>& parts);

// Matrix of a path or an element: X_{source} -> X_{target}.
RatMatrix path_action(const BoundQuiverAlgebra& a, const Representation& x, const Path& p);
RatMatrix element_action(const BoundQuiverAlgebra& a, const Representation& x, const AlgebraElement& e);

// Shapes and relations; throws ValidationError describing the first failure.
void check_representation(const BoundQuiverAlgebra& a, const Representation& x);
bool is_representation(const BoundQuiverAlgebra& a, const Representation& x);
bool is_morphism(const BoundQuiverAlgebra& a, const Representation& x, const Representation& y, const RepMorphism& f);

RepMorphism identity_morphism(const Representation& x);
RepMorphism compose(const RepMorphism& g, const RepMorphism& f);  // g after f

struct SubRepresentation {
  Representation rep;
  RepMorphism inclusion;
};
struct QuotientRepresentation {
  Representation rep;
  RepMorphism projection;
};
SubRepresentation kernel(const BoundQuiverAlgebra& a, const Representation& x, const RepMorphism& f);
QuotientRepresentation cokernel(const BoundQuiverAlgebra& a, const Representation& y, const RepMorphism& f);

// Representation of the opposite algebra on the dual spaces (transposed maps).
Representation dual(const Representation& x);

std::vector<RepMorphism> hom_basis(const BoundQuiverAlgebra& a, const Representation& x, const Representation& y);
std::size_t hom_dimension(const BoundQuiverAlgebra& a, const Representation& x, const Representation& y);

// Random element of Hom(X,Y) tested for invertibility, up to five times, then
// a deterministic scan over basis elements and pairwise sums.
std::optional<RepMorphism> find_isomorphism(const BoundQuiverAlgebra& a, const Representation& x,
                                            const Representation& y, std::mt19937_64& rng);

// Representation of A obtained from one of B along an identification A -> B.
Representation pull_back(const AlgebraIsomorphism& iso, const Representation& y_over_b);
// Inverse direction: representation of B from one of A.
Representation push_forward(const AlgebraIsomorphism& iso, const Representation& x_over_a);

}  // namespace tiltlab
