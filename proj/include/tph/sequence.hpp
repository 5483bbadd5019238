#pragma once

#include "tph/laurent.hpp"
#include "tph/matrix.hpp"
#include "tph/problem.hpp"

#include <utility>
#include <vector>

namespace tph {

/// Kernel dimensions of the family T_k and the index data read off them.
struct IndexTable {
  int p = 0;
  int q = 0;
  int n = 0;
  int m = 0;
  std::vector<int> d;     // d_k, k = -m-1 .. n+1
  std::vector<int> delta; // Delta_k = d_k - d_{k-1}, k = -m .. n+1
  int alpha = 0;
  int omega = 0;
  std::vector<int> mu;                       // mu_1 <= ... <= mu_{2(p+q)-omega}
  std::vector<int> multiplicity;             // multiplicity of each mu_i, aligned with mu
  std::vector<std::pair<int, int>> distinct; // (lambda_j, nu_j), ascending lambda

  int d_at(int k) const { return d.at(static_cast<std::size_t>(k + m + 1)); }
  int delta_at(int k) const { return delta.at(static_cast<std::size_t>(k + m)); }
  /// Number of indices equal to k: alpha for k = -m-1, dim H_{k+1} for k in [-m, n].
  int index_multiplicity(int k) const;
};

/// Right essential polynomials as the columns of a 2q x 2(p+q) polynomial matrix.
struct EssentialSet {
  int p = 0;
  int q = 0;
  int n = 0;
  int m = 0;
  LaurentMatrix R;
  std::vector<int> index; // mu_j of column j

  std::size_t size() const { return index.size(); }
};

/// sum_j A_{-j} r_j, i.e. the z^0 coefficient of A(z) R(z). R must have 2q rows
/// and powers inside [-n, m].
ExactMatrix sigma_r(const ASequence& seq, const LaurentMatrix& r);

/// Block Toeplitz T_k with block (i, l) = A_{k+i-l}; shape 2p(n-k+1) x 2q(k+m+1).
ExactMatrix toeplitz_tk(const ASequence& seq, int k);

/// Canonical basis of N_k in coefficient form (column of stacked r_0, ..., r_{k+m}),
/// for k in [-m-1, n+1]. N_{-m-1} is empty and N_{n+1} is the whole space.
ExactMatrix kernel_space_basis(const ASequence& seq, int k);

/// Coefficient vector (r_0; r_1; ...) with `block_rows` rows per coefficient as a column polynomial.
LaurentMatrix coefficient_vector_to_polynomial(const ExactMatrix& vec, std::size_t block_rows);

IndexTable compute_index_table(const ASequence& seq);

/// Full deterministic set of 2(p+q) right essential polynomials. Throws
/// DefectUnsupported when omega > 0.
EssentialSet compute_right_essential_polys(const ASequence& seq, const IndexTable& table);

/// Column j has formal degree <= mu_j + m + 1 and the z^i coefficients of A(z) R_j(z)
/// vanish for i in [mu_j + 1, n].
bool is_essential_column(const ASequence& seq, const LaurentMatrix& column, int index);

} // namespace tph
