#pragma once

#include "tph/kernels.hpp"
#include "tph/matrix.hpp"

namespace tph {

using RrefResult = kernels::RrefResult;

/// Unique reduced row-echelon form over Q, with strictly increasing pivot columns.
RrefResult rref(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

/// Canonical right-kernel basis: one column per free column of rref(m), with a 1
/// in that free coordinate, 0 in the other free coordinates and the pivot
/// coordinates from back-substitution. Columns follow ascending free index.
ExactMatrix right_kernel_basis(const ExactMatrix& m);

/// Exact determinant by fraction-tracking elimination. Throws ShapeError if m is not square.
Rational determinant(const ExactMatrix& m);

/// Exact inverse via Gauss-Jordan on [m | I]. Throws ConsistencyError when m is singular.
ExactMatrix inverse(const ExactMatrix& m);

} // namespace tph
