#include "tph/linalg.hpp"

#include "tph/errors.hpp"

#include <utility>
#include <vector>

namespace tph {

RrefResult rref(const ExactMatrix& m) {
  return kernels::rref(m);
}

std::size_t rank(const ExactMatrix& m) {
  return kernels::rref(m).rank;
}

ExactMatrix right_kernel_basis(const ExactMatrix& m) {
  const auto res = kernels::rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : res.pivot_columns) {
    is_pivot[c] = true;
  }
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) {
      free_cols.push_back(c);
    }
  }
  ExactMatrix basis(m.cols(), free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    const std::size_t f = free_cols[j];
    basis(f, j) = 1;
    for (std::size_t i = 0; i < res.rank; ++i) {
      basis(res.pivot_columns[i], j) = -res.reduced(i, f);
    }
  }
  return basis;
}

Rational determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) {
    throw ShapeError("determinant: matrix is not square");
  }
  ExactMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && sgn(a(p, col)) == 0) {
      ++p;
    }
    if (p == n) {
      return 0;
    }
    if (p != col) {
      for (std::size_t c = col; c < n; ++c) {
        std::swap(a(p, c), a(col, c));
      }
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(a(r, col)) == 0) {
        continue;
      }
      const Rational f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) {
        a(r, c) -= f * a(col, c);
      }
    }
  }
  return det;
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) {
    throw ShapeError("inverse: matrix is not square");
  }
  const std::size_t n = m.rows();
  const auto res = kernels::rref(hstack({m, ExactMatrix::identity(n)}));
  if (res.rank < n || (n > 0 && res.pivot_columns[n - 1] != n - 1)) {
    throw ConsistencyError("inverse: matrix is singular");
  }
  return res.reduced.block(0, n, n, n);
}

} // namespace tph
