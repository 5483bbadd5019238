#pragma once

#include "tph/laurent.hpp"
#include "tph/problem.hpp"
#include "tph/sequence.hpp"

#include <utility>

namespace tph {

struct ConformationData {
  LaurentMatrix dz;          // diag(z^{mu_1}, ..., z^{mu_s})
  LaurentMatrix alpha_minus; // 2p x s, powers <= 0
  LaurentMatrix beta_plus;   // 2p x s, powers >= 0
  LaurentMatrix u_minus;     // s x s, powers <= 0
  LaurentMatrix u_minus_inverse;
  Rational det_const;        // det U_-(z)
  LaurentMatrix L;           // last 2p columns of U_-^{-1}; s x 2p, powers <= 0
};

/// Splits A(z)R(z) = alpha_-(z) d(z) - z^{n+1} beta_+(z) column by column:
/// terms at powers <= mu_j go to alpha_-, terms at powers >= n+1 to beta_+.
/// Throws EssentialityViolation if a term lands in (mu_j, n].
std::pair<LaurentMatrix, LaurentMatrix> split_decomposition(const ASequence& seq, const EssentialSet& ess);

/// U_- = [ z^{-m-1} R(z) d^{-1}(z) ; alpha_-(z) ].
LaurentMatrix build_u_minus(const EssentialSet& ess, const LaurentMatrix& alpha_minus);

/// Runs the split, builds U_-, checks it is unimodular and extracts the
/// conforming left essential polynomials.
ConformationData conform_left(const ASequence& seq, const EssentialSet& ess);

} // namespace tph
