#pragma once

#include <vector>

#include "fibint/rational.hpp"

namespace fibint {

using MatQ = std::vector<VecQ>;

/// Exact rank via Gaussian elimination over Q.
int matrix_rank(MatQ m);

/// Basis of the kernel {v : M v = 0} in R^ncols. Vectors are scaled to
/// primitive integer form with positive leading entry, ordered by free
/// column, so the output is canonical.
std::vector<VecQ> nullspace_basis(const MatQ& m, int ncols);

/// Scales v so that entries are coprime integers and the first nonzero entry
/// is positive. The zero vector is returned unchanged.
VecQ primitive_integer_form(const VecQ& v);

}  // namespace fibint
