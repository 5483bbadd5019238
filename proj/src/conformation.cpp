#include "tph/conformation.hpp"

#include "tph/errors.hpp"
#include "tph/polymat.hpp"

#include <string>
#include <vector>

namespace tph {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

void require_full_set(const EssentialSet& ess) {
  const std::size_t s = sz(2 * (ess.p + ess.q));
  if (ess.R.rows() != sz(2 * ess.q) || ess.R.cols() != s || ess.index.size() != s) {
    throw ShapeError("essential set must be 2q x 2(p+q) with one index per column");
  }
}

} // namespace

std::pair<LaurentMatrix, LaurentMatrix> split_decomposition(const ASequence& seq, const EssentialSet& ess) {
  require_full_set(ess);
  const std::size_t s = ess.R.cols();
  const LaurentMatrix product = lmul(seq.generator, ess.R);
  LaurentMatrix alpha(product.rows(), s);
  LaurentMatrix beta(product.rows(), s);
  for (const auto& [power, coeff] : product.coefficients()) {
    for (std::size_t j = 0; j < s; ++j) {
      const int mu = ess.index[j];
      ExactMatrix col(product.rows(), s);
      bool any = false;
      for (std::size_t r = 0; r < product.rows(); ++r) {
        if (sgn(coeff(r, j)) != 0) {
          col(r, j) = coeff(r, j);
          any = true;
        }
      }
      if (!any) {
        continue;
      }
      if (power <= mu) {
        alpha.add_coeff(power - mu, col);
      } else if (power >= seq.n + 1) {
        beta.add_coeff(power - seq.n - 1, -col);
      } else {
        throw EssentialityViolation("column " + std::to_string(j) + " with index " + std::to_string(mu) +
                                    " has a nonzero coefficient at z^" + std::to_string(power));
      }
    }
  }
  return {alpha, beta};
}

LaurentMatrix build_u_minus(const EssentialSet& ess, const LaurentMatrix& alpha_minus) {
  require_full_set(ess);
  if (alpha_minus.cols() != ess.R.cols() || alpha_minus.rows() != sz(2 * ess.p)) {
    throw ShapeError("build_u_minus: alpha_- must be 2p x 2(p+q)");
  }
  std::vector<int> shifts(ess.index.size());
  for (std::size_t j = 0; j < shifts.size(); ++j) {
    shifts[j] = -ess.m - 1 - ess.index[j];
  }
  return vstack({ess.R.shift_columns(shifts), alpha_minus});
}

ConformationData conform_left(const ASequence& seq, const EssentialSet& ess) {
  require_full_set(ess);
  const std::size_t s = ess.R.cols();
  ConformationData conf;
  conf.dz = LaurentMatrix(s, s);
  for (std::size_t j = 0; j < s; ++j) {
    ExactMatrix e(s, s);
    e(j, j) = 1;
    conf.dz.add_coeff(ess.index[j], e);
  }
  auto [alpha, beta] = split_decomposition(seq, ess);
  conf.alpha_minus = std::move(alpha);
  conf.beta_plus = std::move(beta);
  conf.u_minus = build_u_minus(ess, conf.alpha_minus);

  const LaurentMatrix det = polymat_det(conf.u_minus);
  if (det.is_zero() || det.lo() != 0 || det.hi() != 0) {
    throw NotUnimodular("conform_left: U_-(z) is not unimodular");
  }
  conf.det_const = det.coeff(0)(0, 0);
  conf.u_minus_inverse = polymat_inverse_unimodular(conf.u_minus);
  const std::size_t two_p = sz(2 * ess.p);
  conf.L = conf.u_minus_inverse.block(0, s - two_p, s, two_p);
  return conf;
}

} // namespace tph
