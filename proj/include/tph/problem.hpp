#pragma once

#include "tph/laurent.hpp"
#include "tph/matrix.hpp"

#include <vector>

namespace tph {

enum class Sign { plus, minus };

/// Block T+H data: T has blocks a_{i-k}, H has blocks b_{i+k}, i = 0..n, k = 0..m,
/// every block p x q.
struct TphProblem {
  int p = 0;
  int q = 0;
  int n = 0;
  int m = 0;
  std::vector<ExactMatrix> a; // a_{-m}, ..., a_n
  std::vector<ExactMatrix> b; // b_0, ..., b_{n+m}

  const ExactMatrix& a_at(int j) const { return a.at(static_cast<std::size_t>(j + m)); }
  const ExactMatrix& b_at(int j) const { return b.at(static_cast<std::size_t>(j)); }

  /// Throws ShapeError unless the block counts and shapes match (p, q, n, m).
  void validate() const;
};

/// Generating blocks A_{-m..n} (2p x 2q) and the Laurent function A(z).
struct ASequence {
  int p = 0;
  int q = 0;
  int n = 0;
  int m = 0;
  std::vector<ExactMatrix> blocks; // A_{-m}, ..., A_n
  LaurentMatrix generator;

  const ExactMatrix& at(int j) const { return blocks.at(static_cast<std::size_t>(j + m)); }
  bool is_zero() const { return generator.is_zero(); }
};

/// A_j = [[b_{n-j}, a_{n-m-j}], [a_j, b_{j+m}]].
ASequence build_generating_sequence(const TphProblem& prob);

ExactMatrix toeplitz_part(const TphProblem& prob);
ExactMatrix hankel_part(const TphProblem& prob);
/// Dense T+H or T-H, shape (n+1)p x (m+1)q.
ExactMatrix tph_matrix(const TphProblem& prob, Sign sign);

/// Problem whose T+H is the transpose of prob's: p <-> q, n <-> m,
/// a'_j = a_{-j}^t, b'_j = b_j^t.
TphProblem transposed_problem(const TphProblem& prob);

} // namespace tph
