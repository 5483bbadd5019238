#include "tph/polymat.hpp"

#include "tph/errors.hpp"
#include "tph/linalg.hpp"

#include <omp.h>

#include <algorithm>

namespace tph {

namespace {

void require_polynomial_in_inverse_z(const LaurentMatrix& u, const char* what) {
  if (u.rows() != u.cols()) {
    throw ShapeError(std::string(what) + ": matrix is not square");
  }
  if (!u.is_zero() && u.hi() > 0) {
    throw PreconditionError(std::string(what) + ": positive powers of z present");
  }
}

// Degree in w = z^{-1} of every column; -1 marks an identically zero column.
std::vector<int> column_degrees(const LaurentMatrix& u) {
  std::vector<int> deg(u.cols(), -1);
  for (const auto& [p, c] : u.coefficients()) {
    for (std::size_t j = 0; j < u.cols(); ++j) {
      for (std::size_t r = 0; r < u.rows(); ++r) {
        if (sgn(c(r, j)) != 0) {
          deg[j] = std::max(deg[j], -p);
          break;
        }
      }
    }
  }
  return deg;
}

// U as a function of w = z^{-1}, evaluated at w = x.
ExactMatrix evaluate_in_w(const LaurentMatrix& u, long x) {
  ExactMatrix out(u.rows(), u.cols());
  for (const auto& [p, c] : u.coefficients()) {
    mpz_class xp;
    mpz_ui_pow_ui(xp.get_mpz_t(), static_cast<unsigned long>(x), static_cast<unsigned long>(-p));
    out += Rational(xp) * c;
  }
  return out;
}

// Monomial coefficients of the polynomial through (0, y_0), ..., (D, y_D).
std::vector<Rational> interpolate_at_integers(std::vector<Rational> y) {
  const std::size_t npts = y.size();
  // Newton divided differences, in place.
  for (std::size_t level = 1; level < npts; ++level) {
    for (std::size_t i = npts - 1; i >= level; --i) {
      y[i] = (y[i] - y[i - 1]) / Rational(static_cast<long>(level));
    }
  }
  std::vector<Rational> poly{y.empty() ? Rational(0) : y[npts - 1]};
  for (std::size_t i = npts - 1; i-- > 0;) {
    // poly <- poly * (w - i) + y[i]
    std::vector<Rational> next(poly.size() + 1);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= Rational(static_cast<long>(i)) * poly[k];
    }
    next[0] += y[i];
    poly = std::move(next);
  }
  return poly;
}

} // namespace

namespace kernels {

std::vector<Rational> det_samples_serial(const LaurentMatrix& u, int degree_bound) {
  std::vector<Rational> samples(static_cast<std::size_t>(degree_bound) + 1);
  for (int x = 0; x <= degree_bound; ++x) {
    samples[static_cast<std::size_t>(x)] = determinant(evaluate_in_w(u, x));
  }
  return samples;
}

std::vector<Rational> det_samples_omp(const LaurentMatrix& u, int degree_bound) {
  std::vector<Rational> samples(static_cast<std::size_t>(degree_bound) + 1);
#pragma omp parallel for schedule(dynamic, 1)
  for (int x = 0; x <= degree_bound; ++x) {
    samples[static_cast<std::size_t>(x)] = determinant(evaluate_in_w(u, x));
  }
  return samples;
}

} // namespace kernels

LaurentMatrix polymat_det(const LaurentMatrix& u) {
  require_polynomial_in_inverse_z(u, "polymat_det");
  LaurentMatrix det(1, 1);
  if (u.rows() == 0) {
    det.set_coeff(0, ExactMatrix::identity(1));
    return det;
  }
  const auto degrees = column_degrees(u);
  if (std::any_of(degrees.begin(), degrees.end(), [](int d) { return d < 0; })) {
    return det;
  }
  int bound = 0;
  for (int d : degrees) {
    bound += d;
  }
  const auto samples = (bound >= 8 && !omp_in_parallel()) ? kernels::det_samples_omp(u, bound)
                                                          : kernels::det_samples_serial(u, bound);
  const auto poly = interpolate_at_integers(samples);
  for (std::size_t k = 0; k < poly.size(); ++k) {
    ExactMatrix c(1, 1);
    c(0, 0) = poly[k];
    det.set_coeff(-static_cast<int>(k), c);
  }
  return det;
}

LaurentMatrix polymat_inverse_unimodular(const LaurentMatrix& u) {
  const LaurentMatrix det = polymat_det(u);
  const std::size_t n = u.rows();
  if (det.is_zero() || det.lo() != 0 || det.hi() != 0) {
    throw NotUnimodular("polymat_inverse_unimodular: determinant is not a nonzero constant");
  }
  if (n == 0) {
    return LaurentMatrix(0, 0);
  }
  // U(w) = sum_k W_k w^k with W_0 = U(0) invertible because det U = det W_0 != 0.
  // Power-series inverse: V_0 = W_0^{-1}, V_k = -V_0 sum_{i=1..k} W_i V_{k-i}.
  const int deg_u = -u.lo();
  int bound = 0;
  for (int d : column_degrees(u)) {
    bound += d;
  }
  std::vector<ExactMatrix> w(static_cast<std::size_t>(deg_u) + 1);
  for (int k = 0; k <= deg_u; ++k) {
    w[static_cast<std::size_t>(k)] = u.coeff(-k);
  }
  std::vector<ExactMatrix> v;
  v.reserve(static_cast<std::size_t>(bound) + 1);
  v.push_back(inverse(w[0]));
  for (int k = 1; k <= bound; ++k) {
    ExactMatrix acc(n, n);
    for (int i = 1; i <= std::min(k, deg_u); ++i) {
      acc += w[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(k - i)];
    }
    v.push_back(-(v[0] * acc));
  }
  LaurentMatrix inv(n, n);
  for (int k = 0; k <= bound; ++k) {
    inv.set_coeff(-k, v[static_cast<std::size_t>(k)]);
  }
  if (!(lmul(u, inv) == LaurentMatrix::identity(n))) {
    throw ConsistencyError("polymat_inverse_unimodular: series inverse failed to terminate");
  }
  return inv;
}

} // namespace tph
