#pragma once

#include <cstddef>
#include <vector>

#include "tiltlab/mutation.hpp"
#include "tiltlab/representation.hpp"

namespace tiltlab {

struct FunctorResult {
  BoundQuiverAlgebra algebra_out;
  Representation rep_out;
  DimensionVector expected;  // t_k (or t_k^{-1}) applied to the input dimension vector
  bool dim_check = false;    // dim rep_out == expected
};

// Kernel construction at the sink k; the output lives over σ_k(a).
FunctorResult reflect_plus(const BoundQuiverAlgebra& a, int k, const Representation& x);
FunctorResult reflect_plus(const MutationResult& m, const Representation& x);
// Cokernel construction at the source k; the output lives over σ_k^-(a).
FunctorResult reflect_minus(const BoundQuiverAlgebra& a, int k, const Representation& y);
FunctorResult reflect_minus(const MutationResult& cotilt, const Representation& y);

// Composites along the tilt sequence, returned over the input algebra through
// the rotation identification. Throw ValidationError when the rotation check fails.
Representation coxeter_plus(const TiltSequence& seq, const Representation& x);
Representation coxeter_minus(const TiltSequence& seq, const Representation& x);
Representation coxeter_plus(const BoundQuiverAlgebra& a, const Representation& x);
Representation coxeter_minus(const BoundQuiverAlgebra& a, const Representation& x);

// T_1^- ... T_{i-1}^- applied to the simple projective of stage i (1-based),
// expressed over stage 1.
Representation rebuild_from_simple(const TiltSequence& seq, std::size_t stage);

// τ_n^- P_k followed by the P_i with i != k.
std::vector<Representation> apr_tilting_module(const BoundQuiverAlgebra& a, int k);
// Ext^j(T_k, X) = 0 for 1 <= j <= n.
bool in_F0(const BoundQuiverAlgebra& a, int k, const Representation& x);

}  // namespace tiltlab
