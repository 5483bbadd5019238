#include "tph/kernels.hpp"

#include "tph/errors.hpp"

#include <omp.h>

#include <string>
#include <utility>

namespace tph::kernels {

namespace {

void require_conformable(const ExactMatrix& lhs, const ExactMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw ShapeError("matmul: " + std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()) + " times " +
                     std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols()));
  }
}

// Row i of the product, skipping zero entries of lhs (exact data is often sparse).
void product_row(const ExactMatrix& lhs, const ExactMatrix& rhs, ExactMatrix& out, std::size_t i) {
  const auto out_row = out.row(i);
  mpq_class t;
  for (std::size_t k = 0; k < lhs.cols(); ++k) {
    const auto& a = lhs(i, k);
    if (sgn(a) == 0) {
      continue;
    }
    const auto rhs_row = rhs.row(k);
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
      if (sgn(rhs_row[j]) != 0) {
        mpq_mul(t.get_mpq_t(), a.get_mpq_t(), rhs_row[j].get_mpq_t());
        out_row[j] += t;
      }
    }
  }
}

// Finds the pivot for `col` at or below `row`, swaps it up and normalizes it to 1.
bool place_pivot(ExactMatrix& m, std::size_t row, std::size_t col) {
  std::size_t p = row;
  while (p < m.rows() && sgn(m(p, col)) == 0) {
    ++p;
  }
  if (p == m.rows()) {
    return false;
  }
  if (p != row) {
    auto a = m.row(p);
    auto b = m.row(row);
    for (std::size_t c = col; c < m.cols(); ++c) {
      std::swap(a[c], b[c]);
    }
  }
  const Rational inv = 1 / m(row, col);
  auto pr = m.row(row);
  for (std::size_t c = col; c < m.cols(); ++c) {
    pr[c] *= inv;
  }
  return true;
}

void eliminate_row(ExactMatrix& m, std::size_t target, std::size_t pivot_row, std::size_t col) {
  if (target == pivot_row || sgn(m(target, col)) == 0) {
    return;
  }
  const Rational f = m(target, col);
  auto tr = m.row(target);
  const auto pr = m.row(pivot_row);
  mpq_class t;
  for (std::size_t c = col; c < m.cols(); ++c) {
    if (sgn(pr[c]) != 0) {
      mpq_mul(t.get_mpq_t(), f.get_mpq_t(), pr[c].get_mpq_t());
      tr[c] -= t;
    }
  }
}

} // namespace

ExactMatrix matmul_serial(const ExactMatrix& lhs, const ExactMatrix& rhs) {
  require_conformable(lhs, rhs);
  ExactMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    product_row(lhs, rhs, out, i);
  }
  return out;
}

ExactMatrix matmul_omp(const ExactMatrix& lhs, const ExactMatrix& rhs) {
  require_conformable(lhs, rhs);
  ExactMatrix out(lhs.rows(), rhs.cols());
  const auto n = static_cast<std::ptrdiff_t>(lhs.rows());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    product_row(lhs, rhs, out, static_cast<std::size_t>(i));
  }
  return out;
}

ExactMatrix matmul(const ExactMatrix& lhs, const ExactMatrix& rhs) {
  const std::size_t work = lhs.rows() * lhs.cols() * rhs.cols();
  if (work >= kMatmulParallelWork && lhs.rows() > 1 && !omp_in_parallel()) {
    return matmul_omp(lhs, rhs);
  }
  return matmul_serial(lhs, rhs);
}

RrefResult rref_serial(ExactMatrix m) {
  RrefResult res;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    if (!place_pivot(m, row, col)) {
      continue;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      eliminate_row(m, r, row, col);
    }
    res.pivot_columns.push_back(col);
    ++row;
  }
  res.rank = res.pivot_columns.size();
  res.reduced = std::move(m);
  return res;
}

RrefResult rref_omp(ExactMatrix m) {
  RrefResult res;
  std::size_t row = 0;
  const auto nrows = static_cast<std::ptrdiff_t>(m.rows());
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    if (!place_pivot(m, row, col)) {
      continue;
    }
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t r = 0; r < nrows; ++r) {
      eliminate_row(m, static_cast<std::size_t>(r), row, col);
    }
    res.pivot_columns.push_back(col);
    ++row;
  }
  res.rank = res.pivot_columns.size();
  res.reduced = std::move(m);
  return res;
}

RrefResult rref(ExactMatrix m) {
  if (m.rows() * m.cols() >= kRrefParallelWork && !omp_in_parallel()) {
    return rref_omp(std::move(m));
  }
  return rref_serial(std::move(m));
}

} // namespace tph::kernels
