#include "tph/assembly.hpp"

#include "tph/errors.hpp"
#include "tph/linalg.hpp"
#include "tph/oracle.hpp"

#include <utility>

namespace tph {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

const Rational kHalf = make_rational(1, 2);

ExactMatrix signed_sum(const ExactMatrix& a, const ExactMatrix& b, Sign sign) {
  return sign == Sign::plus ? a + b : a - b;
}

} // namespace

std::array<std::size_t, 4> group_widths(int p, int q) {
  return {sz(q), sz(q), sz(p), sz(p)};
}

std::array<std::size_t, 4> group_offsets(int p, int q) {
  return {0, sz(q), sz(2 * q), sz(2 * q + p)};
}

ExactMatrix PiStructure::group_restriction(std::size_t group) const {
  const std::size_t w = group_widths(p, q).at(group);
  const std::size_t off = group_offsets(p, q).at(group);
  ExactMatrix out(sz(m + 1) * w, sz(n + 1) * w);
  for (int r = 0; r <= m; ++r) {
    for (int c = 0; c <= n; ++c) {
      out.set_block(sz(r) * w, sz(c) * w, block_at(r - c).block(off, off, w, w));
    }
  }
  return out;
}

PiStructure build_pi(const IndexTable& table, int p, int q, int n, int m) {
  PiStructure pi{p, q, n, m, {}, {}};
  const std::size_t s = pi.s();
  for (int k = -n; k <= m; ++k) {
    pi.blocks.emplace(k, ExactMatrix(s, s));
  }
  std::size_t offset = 0;
  for (const auto& [lambda, nu] : table.distinct) {
    const auto it = pi.blocks.find(-lambda);
    if (it != pi.blocks.end()) {
      for (std::size_t i = offset; i < offset + sz(nu); ++i) {
        it->second(i, i) = 1;
      }
    }
    offset += sz(nu);
  }
  pi.assembled = ExactMatrix(sz(m + 1) * s, sz(n + 1) * s);
  for (int r = 0; r <= m; ++r) {
    for (int c = 0; c <= n; ++c) {
      pi.assembled.set_block(sz(r) * s, sz(c) * s, pi.block_at(r - c));
    }
  }
  return pi;
}

ExactMatrix lower_band_toeplitz(const LaurentMatrix& poly, int nblocks) {
  const std::size_t br = poly.rows();
  const std::size_t bc = poly.cols();
  ExactMatrix out(br * sz(nblocks), bc * sz(nblocks));
  for (int i = 0; i < nblocks; ++i) {
    for (int j = 0; j <= i; ++j) {
      out.set_block(sz(i) * br, sz(j) * bc, poly.coeff(i - j));
    }
  }
  return out;
}

ExactMatrix upper_band_toeplitz(const LaurentMatrix& poly, int nblocks) {
  const std::size_t br = poly.rows();
  const std::size_t bc = poly.cols();
  ExactMatrix out(br * sz(nblocks), bc * sz(nblocks));
  for (int i = 0; i < nblocks; ++i) {
    for (int j = i; j < nblocks; ++j) {
      out.set_block(sz(i) * br, sz(j) * bc, poly.coeff(i - j));
    }
  }
  return out;
}

ExactMatrix block_exchange(int nblocks, std::size_t block_size) {
  ExactMatrix j(sz(nblocks) * block_size, sz(nblocks) * block_size);
  for (int b = 0; b < nblocks; ++b) {
    j.set_block(sz(b) * block_size, sz(nblocks - 1 - b) * block_size, ExactMatrix::identity(block_size));
  }
  return j;
}

PartitionedEssentials partition_essentials(const LaurentMatrix& R, const LaurentMatrix& L, const LaurentMatrix& dz,
                                           int p, int q) {
  const std::size_t s = sz(2 * (p + q));
  if (R.rows() != sz(2 * q) || R.cols() != s || L.rows() != s || L.cols() != sz(2 * p)) {
    throw ShapeError("partition_essentials: R must be 2q x 2(p+q) and L 2(p+q) x 2p");
  }
  PartitionedEssentials parts;
  parts.R1 = R.block(0, 0, sz(q), s);
  parts.R2 = R.block(sz(q), 0, sz(q), s);
  parts.L1 = L.block(0, 0, s, sz(p));
  parts.L2 = L.block(0, sz(p), s, sz(p));
  const auto widths = group_widths(p, q);
  const auto offsets = group_offsets(p, q);
  for (std::size_t g = 0; g < 4; ++g) {
    for (std::size_t half = 0; half < 2; ++half) {
      parts.Rij[half][g] = R.block(half * sz(q), offsets[g], sz(q), widths[g]);
      parts.Lij[g][half] = L.block(offsets[g], half * sz(p), widths[g], sz(p));
    }
    if (dz.rows() == s) {
      parts.d_groups[g] = dz.block(offsets[g], offsets[g], widths[g], widths[g]);
    }
  }
  return parts;
}

BandFactors build_band_factors(const PartitionedEssentials& parts, int n, int m) {
  BandFactors f;
  f.T_R1 = lower_band_toeplitz(parts.R1, m + 1);
  f.T_R2 = lower_band_toeplitz(parts.R2, m + 1);
  f.T_L1 = upper_band_toeplitz(parts.L1, n + 1);
  f.T_L2 = upper_band_toeplitz(parts.L2, n + 1);
  f.H_R2 = block_exchange(m + 1, parts.R2.rows()) * f.T_R2;
  f.H_L1 = f.T_L1 * block_exchange(n + 1, parts.L1.cols());
  return f;
}

ExactMatrix pinv_block_toeplitz(const ASequence& seq, const EssentialSet& ess, const ConformationData& conf,
                                const IndexTable& table) {
  const PiStructure pi = build_pi(table, seq.p, seq.q, seq.n, seq.m);
  return lower_band_toeplitz(ess.R, seq.m + 1) * pi.assembled * upper_band_toeplitz(conf.L, seq.n + 1);
}

ExactMatrix build_mosaic(const TphProblem& prob) {
  prob.validate();
  const int n = prob.n;
  const int m = prob.m;
  const std::size_t p = sz(prob.p);
  const std::size_t q = sz(prob.q);
  const std::size_t half_rows = p * sz(n + 1);
  const std::size_t half_cols = q * sz(m + 1);
  ExactMatrix mosaic(2 * half_rows, 2 * half_cols);
  for (int i = 0; i <= n; ++i) {
    for (int k = 0; k <= m; ++k) {
      const std::size_t r = sz(i) * p;
      const std::size_t c = sz(k) * q;
      mosaic.set_block(r, c, prob.b_at(n - i + k));
      mosaic.set_block(r, half_cols + c, prob.a_at(n - m - i + k));
      mosaic.set_block(half_rows + r, c, prob.a_at(i - k));
      mosaic.set_block(half_rows + r, half_cols + c, prob.b_at(m - k + i));
    }
  }
  return mosaic;
}

ExactMatrix permutation_p1(const TphProblem& prob) {
  const std::size_t p = sz(prob.p);
  const std::size_t blocks = sz(prob.n + 1);
  ExactMatrix perm(2 * p * blocks, 2 * p * blocks);
  for (std::size_t g = 0; g < 2; ++g) {
    for (std::size_t i = 0; i < blocks; ++i) {
      for (std::size_t t = 0; t < p; ++t) {
        perm(g * p * blocks + i * p + t, i * 2 * p + g * p + t) = 1;
      }
    }
  }
  return perm;
}

ExactMatrix permutation_p2(const TphProblem& prob) {
  const std::size_t q = sz(prob.q);
  const std::size_t blocks = sz(prob.m + 1);
  ExactMatrix perm(2 * q * blocks, 2 * q * blocks);
  for (std::size_t g = 0; g < 2; ++g) {
    for (std::size_t c = 0; c < blocks; ++c) {
      for (std::size_t t = 0; t < q; ++t) {
        perm(c * 2 * q + g * q + t, g * q * blocks + c * q + t) = 1;
      }
    }
  }
  return perm;
}

namespace {

// [[J, J], [I, -I]] and [[I, J], [-I, J]] with J the block reversal of `blocks` blocks of size `bs`.
ExactMatrix merchant_left(int blocks, std::size_t bs) {
  const ExactMatrix j = block_exchange(blocks, bs);
  const ExactMatrix i = ExactMatrix::identity(j.rows());
  return vstack({hstack({j, j}), hstack({i, -i})});
}

ExactMatrix merchant_right(int blocks, std::size_t bs) {
  const ExactMatrix j = block_exchange(blocks, bs);
  const ExactMatrix i = ExactMatrix::identity(j.rows());
  return vstack({hstack({i, j}), hstack({-i, j})});
}

} // namespace

bool merchant_factor_check(const TphProblem& prob) {
  const ExactMatrix middle = block_diag(tph_matrix(prob, Sign::plus), tph_matrix(prob, Sign::minus));
  const ExactMatrix rhs =
      kHalf * (merchant_left(prob.n + 1, sz(prob.p)) * middle * merchant_right(prob.m + 1, sz(prob.q)));
  return rhs == build_mosaic(prob);
}

ExactMatrix mosaic_g_matrix(const TphProblem& prob, const ExactMatrix& block_toeplitz_pinv) {
  const ExactMatrix mosaic_pinv =
      permutation_p2(prob).transpose() * block_toeplitz_pinv * permutation_p1(prob).transpose();
  return kHalf * (merchant_right(prob.m + 1, sz(prob.q)) * mosaic_pinv * merchant_left(prob.n + 1, sz(prob.p)));
}

Pipeline run_pipeline(const TphProblem& prob) {
  Pipeline pipe;
  pipe.seq = build_generating_sequence(prob);
  pipe.table = compute_index_table(pipe.seq);
  pipe.ess = compute_right_essential_polys(pipe.seq, pipe.table);
  pipe.conf = conform_left(pipe.seq, pipe.ess);
  pipe.pi = build_pi(pipe.table, prob.p, prob.q, prob.n, prob.m);
  return pipe;
}

ExactMatrix assemble_direct(const TphProblem& prob, const LaurentMatrix& R, const LaurentMatrix& L,
                            const PiStructure& pi, Sign sign) {
  const auto parts = partition_essentials(R, L, LaurentMatrix(), prob.p, prob.q);
  const auto f = build_band_factors(parts, prob.n, prob.m);
  return kHalf * (signed_sum(f.T_R1, f.H_R2, sign) * pi.assembled * signed_sum(f.T_L2, f.H_L1, sign));
}

ExactMatrix assemble_blockwise(const TphProblem& prob, const LaurentMatrix& R, const LaurentMatrix& L,
                               const PiStructure& pi, Sign sign) {
  const auto parts = partition_essentials(R, L, LaurentMatrix(), prob.p, prob.q);
  const ExactMatrix jq = block_exchange(prob.m + 1, sz(prob.q));
  const ExactMatrix jp = block_exchange(prob.n + 1, sz(prob.p));
  const std::size_t rows = sz((prob.m + 1) * prob.q);
  const std::size_t cols = sz((prob.n + 1) * prob.p);
  ExactMatrix same(rows, cols);  // T pi T + H pi H
  ExactMatrix cross(rows, cols); // T pi H + H pi T
  for (std::size_t g = 0; g < 4; ++g) {
    const ExactMatrix pi_g = pi.group_restriction(g);
    const ExactMatrix t_r1 = lower_band_toeplitz(parts.Rij[0][g], prob.m + 1);
    const ExactMatrix h_r2 = jq * lower_band_toeplitz(parts.Rij[1][g], prob.m + 1);
    const ExactMatrix t_l2 = upper_band_toeplitz(parts.Lij[g][1], prob.n + 1);
    const ExactMatrix h_l1 = upper_band_toeplitz(parts.Lij[g][0], prob.n + 1) * jp;
    same += t_r1 * pi_g * t_l2;
    same += h_r2 * pi_g * h_l1;
    cross += t_r1 * pi_g * h_l1;
    cross += h_r2 * pi_g * t_l2;
  }
  return kHalf * signed_sum(same, cross, sign);
}

ExactMatrix pinv_tph_from_essentials(const TphProblem& prob, const EssentialSet& ess, const ConformationData& conf,
                                     const IndexTable& table, Sign sign) {
  prob.validate();
  const PiStructure pi = build_pi(table, prob.p, prob.q, prob.n, prob.m);
  return assemble_direct(prob, ess.R, conf.L, pi, sign);
}

namespace {

ExactMatrix assemble(const TphProblem& prob, const Pipeline& pipe, Sign sign, Method method) {
  return method == Method::direct ? assemble_direct(prob, pipe.ess.R, pipe.conf.L, pipe.pi, sign)
                                  : assemble_blockwise(prob, pipe.ess.R, pipe.conf.L, pipe.pi, sign);
}

} // namespace

TphResult pinv_tph(const TphProblem& prob, Sign sign, const PinvOptions& options) {
  prob.validate();
  TphResult result;
  result.sign = sign;
  result.method = options.method;
  const ExactMatrix a = tph_matrix(prob, sign);
  result.invertible = a.rows() == a.cols() && rank(a) == a.rows();

  if (a.is_zero()) {
    result.pinv = ExactMatrix(a.cols(), a.rows());
    result.zero_short_circuit = true;
  } else {
    const ASequence seq = build_generating_sequence(prob);
    IndexTable table = compute_index_table(seq);
    if (table.omega > 0) {
      if (!options.allow_transpose_fallback) {
        throw DefectUnsupported("right defect omega = " + std::to_string(table.omega) +
                                "; the transposed problem may be tried with the transpose fallback");
      }
      const TphProblem tprob = transposed_problem(prob);
      const Pipeline pipe = run_pipeline(tprob);
      result.pinv = assemble(tprob, pipe, sign, options.method).transpose();
      result.det_const = pipe.conf.det_const;
      result.transposed = true;
    } else {
      const Pipeline pipe = run_pipeline(prob);
      result.pinv = assemble(prob, pipe, sign, options.method);
      result.det_const = pipe.conf.det_const;
    }
    result.table = std::move(table);
  }

  if (options.check) {
    const OracleReport report = is_g_inverse(a, result.pinv);
    result.checks["g_inverse"] = report.is_g_inverse;
    if (result.invertible) {
      const auto id = ExactMatrix::identity(a.rows());
      result.checks["two_sided_inverse"] = result.pinv * a == id && a * result.pinv == id;
    }
  }
  return result;
}

ExactMatrix pinv_tph_blockwise(const TphProblem& prob, Sign sign) {
  PinvOptions opts;
  opts.method = Method::blockwise;
  return pinv_tph(prob, sign, opts).pinv;
}

} // namespace tph
