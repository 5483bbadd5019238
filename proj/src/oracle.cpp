#include "tph/oracle.hpp"

#include "tph/errors.hpp"
#include "tph/linalg.hpp"

namespace tph {

ExactMatrix one_inverse_oracle(const ExactMatrix& a) {
  if (a.is_zero()) {
    return ExactMatrix(a.cols(), a.rows());
  }
  const auto res = rref(a);
  const ExactMatrix f = a.select_columns(res.pivot_columns);
  const ExactMatrix g = res.reduced.block(0, 0, res.rank, a.cols());
  const ExactMatrix ft = f.transpose();
  const ExactMatrix gt = g.transpose();
  ExactMatrix ggt_inv;
  ExactMatrix ftf_inv;
  try {
    ggt_inv = inverse(g * gt);
    ftf_inv = inverse(ft * f);
  } catch (const ConsistencyError&) {
    throw ConsistencyError("one_inverse_oracle: full-rank factor is not of full rank");
  }
  return gt * ggt_inv * ftf_inv * ft;
}

OracleReport is_g_inverse(const ExactMatrix& a, const ExactMatrix& x) {
  if (x.rows() != a.cols() || x.cols() != a.rows()) {
    throw ShapeError("is_g_inverse: X must have the transposed shape of A");
  }
  OracleReport report;
  const ExactMatrix ax = a * x;
  const ExactMatrix xa = x * a;
  report.satisfies_mp.axa = ax * a == a;
  report.satisfies_mp.xax = xa * x == x;
  report.satisfies_mp.ax_sym = ax.transpose() == ax;
  report.satisfies_mp.xa_sym = xa.transpose() == xa;
  report.is_g_inverse = report.satisfies_mp.axa;
  report.rank = rank(a);
  report.invertible = a.rows() == a.cols() && report.rank == a.rows();
  return report;
}

} // namespace tph
