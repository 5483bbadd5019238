#pragma once

#include "tph/laurent.hpp"

#include <vector>

namespace tph {

/// Determinant of a square polynomial matrix in z^{-1} (all powers <= 0),
/// returned as a 1x1 Laurent polynomial in z^{-1}.
LaurentMatrix polymat_det(const LaurentMatrix& u);

/// Exact inverse of a unimodular polynomial matrix in z^{-1}. Throws
/// NotUnimodular when the determinant is zero or not constant.
LaurentMatrix polymat_inverse_unimodular(const LaurentMatrix& u);

namespace kernels {

/// Determinant samples det U(w = 0), ..., det U(w = degree_bound) with w = z^{-1}.
std::vector<Rational> det_samples_serial(const LaurentMatrix& u, int degree_bound);
std::vector<Rational> det_samples_omp(const LaurentMatrix& u, int degree_bound);

} // namespace kernels

} // namespace tph
