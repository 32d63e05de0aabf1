#pragma once

#include <cstddef>
#include <vector>

#include "tiltlab/matrix.hpp"

namespace tiltlab {

inline constexpr std::size_t kDefaultOrderCap = 100000;

struct RowEchelon {
  RatMatrix reduced;                // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
};

RowEchelon rref(RatMatrix m);
std::size_t rank(const RatMatrix& m);

// Bareiss elimination.
std::size_t rank(const IntMatrix& m);
Integer determinant(const IntMatrix& m);
IntMatrix inverse_unimodular(const IntMatrix& m);

RatMatrix inverse(const RatMatrix& m);

// Right kernel. Vector t has a 1 in the t-th free column, 0 in the other free
// columns, and whatever the pivots force.
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m);
// Same basis, as the columns of a cols(m) x k matrix, together with the free columns.
RatMatrix kernel_matrix(const RatMatrix& m, std::vector<std::size_t>* free_columns = nullptr);

// Some solution of a·x = b, or false if the system is inconsistent.
bool solve(const RatMatrix& a, const RatMatrix& b, RatMatrix& x);

std::size_t matrix_order(const IntMatrix& m, std::size_t cap = kDefaultOrderCap);
IntMatrix matrix_power(const IntMatrix& m, long long e);  // e may be negative for unimodular m

RatMatrix to_rational(const IntMatrix& m);
IntMatrix to_integer(const RatMatrix& m);  // throws unless every entry is integral

// Stack matrices with equal column counts on top of each other.
RatMatrix vstack(const std::vector<RatMatrix>& parts, std::size_t cols);

}  // namespace tiltlab
