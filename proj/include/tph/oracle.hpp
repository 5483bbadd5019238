#pragma once

#include "tph/matrix.hpp"

#include <cstddef>

namespace tph {

/// Outcome of checking X against A with exact arithmetic.
struct OracleReport {
  bool is_g_inverse = false; // A X A = A
  struct {
    bool axa = false;      // A X A = A
    bool xax = false;      // X A X = X
    bool ax_sym = false;   // (A X)^t = A X
    bool xa_sym = false;   // (X A)^t = X A
  } satisfies_mp;
  std::size_t rank = 0;
  bool invertible = false;
};

/// Dense {1}-inverse independent of any structure: from the full-rank
/// factorization A = F G (F = pivot columns of A, G = nonzero rows of rref(A)),
/// X = G^t (G G^t)^{-1} (F^t F)^{-1} F^t. That is the Moore-Penrose inverse over Q.
ExactMatrix one_inverse_oracle(const ExactMatrix& a);

/// Throws ShapeError unless X has the transposed shape of A.
OracleReport is_g_inverse(const ExactMatrix& a, const ExactMatrix& x);

} // namespace tph
