#include "tph/problem.hpp"

#include "tph/errors.hpp"

#include <string>

namespace tph {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

} // namespace

void TphProblem::validate() const {
  if (p < 0 || q < 0 || n < 0 || m < 0) {
    throw ShapeError("problem: p, q, n, m must be nonnegative");
  }
  const std::size_t count = sz(n + m + 1);
  if (a.size() != count || b.size() != count) {
    throw ShapeError("problem: expected " + std::to_string(count) + " blocks in a and b, got " +
                     std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
  for (const auto* seq : {&a, &b}) {
    for (const auto& blk : *seq) {
      if (blk.rows() != sz(p) || blk.cols() != sz(q)) {
        throw ShapeError("problem: block of shape " + std::to_string(blk.rows()) + "x" +
                         std::to_string(blk.cols()) + ", expected " + std::to_string(p) + "x" +
                         std::to_string(q));
      }
    }
  }
}

ASequence build_generating_sequence(const TphProblem& prob) {
  prob.validate();
  ASequence seq{prob.p, prob.q, prob.n, prob.m, {}, LaurentMatrix(sz(2 * prob.p), sz(2 * prob.q))};
  const int n = prob.n;
  const int m = prob.m;
  seq.blocks.reserve(sz(n + m + 1));
  for (int j = -m; j <= n; ++j) {
    ExactMatrix blk(sz(2 * prob.p), sz(2 * prob.q));
    blk.set_block(0, 0, prob.b_at(n - j));
    blk.set_block(0, sz(prob.q), prob.a_at(n - m - j));
    blk.set_block(sz(prob.p), 0, prob.a_at(j));
    blk.set_block(sz(prob.p), sz(prob.q), prob.b_at(j + m));
    seq.generator.set_coeff(j, blk);
    seq.blocks.push_back(std::move(blk));
  }
  return seq;
}

ExactMatrix toeplitz_part(const TphProblem& prob) {
  prob.validate();
  ExactMatrix t(sz((prob.n + 1) * prob.p), sz((prob.m + 1) * prob.q));
  for (int i = 0; i <= prob.n; ++i) {
    for (int k = 0; k <= prob.m; ++k) {
      t.set_block(sz(i * prob.p), sz(k * prob.q), prob.a_at(i - k));
    }
  }
  return t;
}

ExactMatrix hankel_part(const TphProblem& prob) {
  prob.validate();
  ExactMatrix h(sz((prob.n + 1) * prob.p), sz((prob.m + 1) * prob.q));
  for (int i = 0; i <= prob.n; ++i) {
    for (int k = 0; k <= prob.m; ++k) {
      h.set_block(sz(i * prob.p), sz(k * prob.q), prob.b_at(i + k));
    }
  }
  return h;
}

ExactMatrix tph_matrix(const TphProblem& prob, Sign sign) {
  return sign == Sign::plus ? toeplitz_part(prob) + hankel_part(prob) : toeplitz_part(prob) - hankel_part(prob);
}

TphProblem transposed_problem(const TphProblem& prob) {
  prob.validate();
  TphProblem t;
  t.p = prob.q;
  t.q = prob.p;
  t.n = prob.m;
  t.m = prob.n;
  for (int j = -t.m; j <= t.n; ++j) {
    t.a.push_back(prob.a_at(-j).transpose());
  }
  for (const auto& blk : prob.b) {
    t.b.push_back(blk.transpose());
  }
  return t;
}

} // namespace tph
