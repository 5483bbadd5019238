#include "tph/sequence.hpp"

#include "tph/errors.hpp"
#include "tph/linalg.hpp"

#include <omp.h>

#include <string>

namespace tph {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

} // namespace

int IndexTable::index_multiplicity(int k) const {
  if (k == -m - 1) {
    return alpha;
  }
  if (k < -m || k > n) {
    return 0;
  }
  return delta_at(k + 1) - delta_at(k);
}

ExactMatrix sigma_r(const ASequence& seq, const LaurentMatrix& r) {
  if (r.rows() != sz(2 * seq.q)) {
    throw ShapeError("sigma_r: operand must have 2q rows");
  }
  ExactMatrix out(sz(2 * seq.p), r.cols());
  if (r.is_zero()) {
    return out;
  }
  if (r.lo() < -seq.n || r.hi() > seq.m) {
    throw PreconditionError("sigma_r: powers of R must lie in [-n, m]");
  }
  for (const auto& [j, rj] : r.coefficients()) {
    out += seq.at(-j) * rj;
  }
  return out;
}

ExactMatrix toeplitz_tk(const ASequence& seq, int k) {
  if (k < -seq.m || k > seq.n) {
    throw PreconditionError("toeplitz_tk: k = " + std::to_string(k) + " outside [-m, n]");
  }
  const std::size_t bp = sz(2 * seq.p);
  const std::size_t bq = sz(2 * seq.q);
  const int block_rows = seq.n - k + 1;
  const int block_cols = k + seq.m + 1;
  ExactMatrix t(bp * sz(block_rows), bq * sz(block_cols));
  for (int i = 0; i < block_rows; ++i) {
    for (int l = 0; l < block_cols; ++l) {
      t.set_block(bp * sz(i), bq * sz(l), seq.at(k + i - l));
    }
  }
  return t;
}

ExactMatrix kernel_space_basis(const ASequence& seq, int k) {
  if (k < -seq.m - 1 || k > seq.n + 1) {
    throw PreconditionError("kernel_space_basis: k outside [-m-1, n+1]");
  }
  if (k == -seq.m - 1) {
    return ExactMatrix(0, 0);
  }
  if (k == seq.n + 1) {
    return ExactMatrix::identity(sz(2 * seq.q * (seq.n + seq.m + 2)));
  }
  return right_kernel_basis(toeplitz_tk(seq, k));
}

LaurentMatrix coefficient_vector_to_polynomial(const ExactMatrix& vec, std::size_t block_rows) {
  if (block_rows == 0 || vec.rows() % block_rows != 0) {
    throw ShapeError("coefficient vector length is not a multiple of the block size");
  }
  LaurentMatrix poly(block_rows, vec.cols());
  for (std::size_t j = 0; j * block_rows < vec.rows(); ++j) {
    poly.set_coeff(static_cast<int>(j), vec.block(j * block_rows, 0, block_rows, vec.cols()));
  }
  return poly;
}

IndexTable compute_index_table(const ASequence& seq) {
  if (seq.is_zero()) {
    throw ZeroSequence("compute_index_table: every block of the sequence is zero");
  }
  const int n = seq.n;
  const int m = seq.m;
  const int s = 2 * (seq.p + seq.q);
  IndexTable t;
  t.p = seq.p;
  t.q = seq.q;
  t.n = n;
  t.m = m;
  t.d.assign(sz(n + m + 3), 0);
  t.d.back() = 2 * seq.q * (n + m + 2);

  // d_k for k in [-m, n]; the ranks are independent, so the family is split across threads.
#pragma omp parallel for schedule(dynamic, 1) if (n + m + 1 >= 4)
  for (int k = -m; k <= n; ++k) {
    const auto tk = toeplitz_tk(seq, k);
    t.d[sz(k + m + 1)] = static_cast<int>(tk.cols() - rank(tk));
  }

  t.delta.resize(sz(n + m + 2));
  for (int k = -m; k <= n + 1; ++k) {
    t.delta[sz(k + m)] = t.d_at(k) - t.d_at(k - 1);
  }
  for (std::size_t i = 1; i < t.delta.size(); ++i) {
    if (t.delta[i] < t.delta[i - 1]) {
      throw ConsistencyError("compute_index_table: Delta chain is not nondecreasing");
    }
  }
  t.alpha = t.delta_at(-m);
  t.omega = s - t.delta_at(n + 1);
  if (t.omega < 0) {
    throw ConsistencyError("compute_index_table: negative right defect");
  }

  // Delta_k counts the indices below k, so index k occurs Delta_{k+1} - Delta_k times.
  for (int k = -m - 1; k <= n; ++k) {
    const int mult = t.index_multiplicity(k);
    if (mult > 0) {
      t.distinct.emplace_back(k, mult);
      for (int i = 0; i < mult; ++i) {
        t.mu.push_back(k);
        t.multiplicity.push_back(mult);
      }
    }
  }
  return t;
}

EssentialSet compute_right_essential_polys(const ASequence& seq, const IndexTable& table) {
  if (seq.is_zero()) {
    throw ZeroSequence("compute_right_essential_polys: zero sequence");
  }
  if (table.omega > 0) {
    throw DefectUnsupported("right defect omega = " + std::to_string(table.omega) +
                            " > 0: no full set of right essential polynomials");
  }
  const int n = seq.n;
  const int m = seq.m;
  const std::size_t bq = sz(2 * seq.q);
  const std::size_t s = sz(2 * (seq.p + seq.q));

  EssentialSet ess{seq.p, seq.q, n, m, LaurentMatrix(bq, s), {}};
  std::size_t next_col = 0;
  for (const auto& [k, mult] : table.distinct) {
    // H_{k+1}: greedy complement of N_k + z N_k inside N_{k+1}, scanning the canonical basis of N_{k+1}.
    const ExactMatrix target = kernel_space_basis(seq, k + 1);
    const std::size_t len = target.rows();
    ExactMatrix span(len, 0);
    if (k >= -m) {
      const ExactMatrix lower = kernel_space_basis(seq, k);
      ExactMatrix embedded(len, 2 * lower.cols());
      embedded.set_block(0, 0, lower);
      embedded.set_block(bq, lower.cols(), lower);
      span = std::move(embedded);
    }
    std::size_t current_rank = rank(span);
    int picked = 0;
    for (std::size_t c = 0; c < target.cols() && picked < mult; ++c) {
      const ExactMatrix candidate = target.column(c);
      ExactMatrix grown = hstack({span, candidate});
      const std::size_t grown_rank = rank(grown);
      if (grown_rank == current_rank) {
        continue;
      }
      span = std::move(grown);
      current_rank = grown_rank;
      const LaurentMatrix poly = coefficient_vector_to_polynomial(candidate, bq);
      for (const auto& [power, coeff] : poly.coefficients()) {
        ExactMatrix wide(bq, s);
        wide.set_block(0, next_col, coeff);
        ess.R.add_coeff(power, wide);
      }
      ess.index.push_back(k);
      ++next_col;
      ++picked;
    }
    if (picked != mult) {
      throw ConsistencyError("compute_right_essential_polys: complement of dimension " + std::to_string(picked) +
                             " found for index " + std::to_string(k) + ", expected " + std::to_string(mult));
    }
  }
  if (ess.size() != s) {
    throw ConsistencyError("compute_right_essential_polys: incomplete essential set");
  }
  return ess;
}

bool is_essential_column(const ASequence& seq, const LaurentMatrix& column, int index) {
  if (column.cols() != 1 || column.rows() != sz(2 * seq.q)) {
    throw ShapeError("is_essential_column: expected a 2q x 1 column");
  }
  if (column.is_zero()) {
    return true;
  }
  if (column.lo() < 0 || column.hi() > index + seq.m + 1) {
    return false;
  }
  const LaurentMatrix product = lmul(seq.generator, column);
  for (int i = index + 1; i <= seq.n; ++i) {
    if (!product.coeff(i).is_zero()) {
      return false;
    }
  }
  return true;
}

} // namespace tph
