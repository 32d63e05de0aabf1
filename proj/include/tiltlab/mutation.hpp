#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tiltlab/algebra.hpp"
#include "tiltlab/forms.hpp"
#include "tiltlab/homology.hpp"

namespace tiltlab {

struct MutationResult {
  BoundQuiverAlgebra algebra_in;
  BoundQuiverAlgebra algebra_out;
  int vertex = 0;
  bool inverse = false;  // true for the cotilt at a source
  std::vector<Arrow> new_arrows;      // endpoints are vertex indices of algebra_out
  std::vector<Arrow> removed_arrows;  // as they were in algebra_in
  std::vector<AlgebraElement> kept_relations;  // over algebra_out
  std::vector<AlgebraElement> new_relations;   // over algebra_out
  // Tilt: the last differential α of the injective resolution of P_k,
  // rows indexed by c_vertices (last term), columns by b_vertices.
  // Cotilt: the same data computed on the opposite algebra.
  std::vector<int> b_vertices;
  std::vector<int> c_vertices;
  AlgebraMatrix differential;
  std::vector<int> new_arrow_of_c;  // arrow index in the quiver that carries the new arrows
};

// n-APR tilt at a sink k. Throws ValidationError when k is not a sink or the
// tilting module does not exist, ComputationError when the output fails
// validation.
MutationResult apr_tilt(const BoundQuiverAlgebra& a, int k);
// Cotilt at a source k, computed as the tilt of the opposite algebra.
MutationResult apr_cotilt(const BoundQuiverAlgebra& a, int k);

struct TiltSequence {
  std::vector<BoundQuiverAlgebra> stages;  // Λ^1, ..., Λ^{l+1}
  std::vector<int> order;                  // vertex tilted at each stage
  std::vector<ReflectionMatrix> reflections;
  std::vector<MutationResult> mutations;
  bool rotation_check = false;
  std::optional<AlgebraIsomorphism> rotation;  // from Λ^1 to Λ^{l+1}
};

TiltSequence tilt_sequence(const BoundQuiverAlgebra& a);
// Tilts at the given vertices in turn; each must be a sink at its stage.
TiltSequence tilt_sequence(const BoundQuiverAlgebra& a, const std::vector<int>& order);

}  // namespace tiltlab
