#pragma once

#include "tph/conformation.hpp"
#include "tph/laurent.hpp"
#include "tph/problem.hpp"
#include "tph/sequence.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>

namespace tph {

/// Block selection matrix built from the distinct indices.
///
/// Pi_k (s x s, diagonal 0/1) is nonzero only for k = -lambda_j, where it marks
/// the positions of the essential columns with index lambda_j. The assembled
/// matrix has block (r, c) = Pi_{r-c}, r in [0, m], c in [0, n].
struct PiStructure {
  int p = 0;
  int q = 0;
  int n = 0;
  int m = 0;
  std::map<int, ExactMatrix> blocks; // k in [-n, m]
  ExactMatrix assembled;             // (m+1)s x (n+1)s

  std::size_t s() const { return static_cast<std::size_t>(2 * (p + q)); }
  const ExactMatrix& block_at(int k) const { return blocks.at(k); }
  /// pi_j: Pi restricted to the diagonal positions of column group j (widths q, q, p, p).
  ExactMatrix group_restriction(std::size_t group) const;
};

/// Halves of the essential matrices and their finer column/row groups.
struct PartitionedEssentials {
  LaurentMatrix R1, R2;                            // q x s each
  LaurentMatrix L1, L2;                            // s x p each
  std::array<std::array<LaurentMatrix, 4>, 2> Rij; // Rij[i][j]: q x (q|q|p|p)
  std::array<std::array<LaurentMatrix, 2>, 4> Lij; // Lij[i][j]: (q|q|p|p) x p
  std::array<LaurentMatrix, 4> d_groups;           // diagonal blocks of d(z)
};

struct BandFactors {
  ExactMatrix T_R1, T_R2; // (m+1)q x (m+1)s
  ExactMatrix T_L1, T_L2; // (n+1)s x (n+1)p
  ExactMatrix H_R2;       // J T_R2
  ExactMatrix H_L1;       // T_L1 J
};

enum class Method { direct, blockwise };

struct PinvOptions {
  Method method = Method::direct;
  bool check = false;
  bool allow_transpose_fallback = false;
};

/// Upstream data shared by both signs.
struct Pipeline {
  ASequence seq;
  IndexTable table;
  EssentialSet ess;
  ConformationData conf;
  PiStructure pi;
};

struct TphResult {
  Sign sign = Sign::plus;
  Method method = Method::direct;
  ExactMatrix pinv;
  std::optional<IndexTable> table; // absent for the zero-matrix short-circuit
  bool zero_short_circuit = false;
  bool transposed = false;         // solved through the transposed problem
  std::optional<Rational> det_const;
  bool invertible = false;         // T +- H square and nonsingular
  std::map<std::string, bool> checks;
};

std::array<std::size_t, 4> group_widths(int p, int q);
std::array<std::size_t, 4> group_offsets(int p, int q);

PiStructure build_pi(const IndexTable& table, int p, int q, int n, int m);

/// Lower-triangular block Toeplitz with block (i, j) = C_{i-j}, i, j in [0, nblocks).
ExactMatrix lower_band_toeplitz(const LaurentMatrix& poly, int nblocks);
/// Upper-triangular block Toeplitz with block (i, j) = C_{i-j} (powers <= 0), i, j in [0, nblocks).
ExactMatrix upper_band_toeplitz(const LaurentMatrix& poly, int nblocks);
/// Block reversal: identity blocks of size block_size on the anti-diagonal.
ExactMatrix block_exchange(int nblocks, std::size_t block_size);

PartitionedEssentials partition_essentials(const LaurentMatrix& R, const LaurentMatrix& L, const LaurentMatrix& dz,
                                           int p, int q);
BandFactors build_band_factors(const PartitionedEssentials& parts, int n, int m);

/// T_A^dagger = T_R Pi T_L from the full essential matrices.
ExactMatrix pinv_block_toeplitz(const ASequence& seq, const EssentialSet& ess, const ConformationData& conf,
                                const IndexTable& table);

/// Mosaic [[J H, J T J], [T, H J]] of shape 2p(n+1) x 2q(m+1).
ExactMatrix build_mosaic(const TphProblem& prob);
/// Row unshuffle of T_A: P1 T_A P2 = M_A.
ExactMatrix permutation_p1(const TphProblem& prob);
/// Column unshuffle of T_A.
ExactMatrix permutation_p2(const TphProblem& prob);
/// Evaluates M_A == 1/2 [[J,J],[I,-I]] diag(T+H, T-H) [[I,J],[-I,J]] exactly.
bool merchant_factor_check(const TphProblem& prob);
/// G = 1/2 [[I,J],[-I,J]] M_A^dagger [[J,J],[I,-I]] with M_A^dagger = P2^t T_A^dagger P1^t.
/// Its diagonal blocks are generalized inverses of T+H and T-H.
ExactMatrix mosaic_g_matrix(const TphProblem& prob, const ExactMatrix& block_toeplitz_pinv);

/// Sequence, indices, essential polynomials, conformation and Pi. Throws
/// ZeroSequence or DefectUnsupported.
Pipeline run_pipeline(const TphProblem& prob);

/// 1/2 (T_R1 +- H_R2) Pi (T_L2 +- H_L1) from explicit R(z), L(z), Pi.
ExactMatrix assemble_direct(const TphProblem& prob, const LaurentMatrix& R, const LaurentMatrix& L,
                            const PiStructure& pi, Sign sign);
/// The same inverse assembled group by group with pi_j and the fine partition.
ExactMatrix assemble_blockwise(const TphProblem& prob, const LaurentMatrix& R, const LaurentMatrix& L,
                               const PiStructure& pi, Sign sign);

ExactMatrix pinv_tph_from_essentials(const TphProblem& prob, const EssentialSet& ess, const ConformationData& conf,
                                     const IndexTable& table, Sign sign);

TphResult pinv_tph(const TphProblem& prob, Sign sign, const PinvOptions& options = {});
ExactMatrix pinv_tph_blockwise(const TphProblem& prob, Sign sign);

} // namespace tph
