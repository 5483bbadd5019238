#include "tph/matrix.hpp"

#include "tph/errors.hpp"
#include "tph/kernels.hpp"

#include <string>

namespace tph {

namespace {

std::string shape_str(const ExactMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const ExactMatrix& a, const ExactMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(what) + ": " + shape_str(a) + " vs " + shape_str(b));
  }
}

} // namespace

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix ExactMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr == 0 ? 0 : rows.begin()->size();
  ExactMatrix m(nr, nc);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != nc) {
      throw ShapeError("from_rows: ragged rows");
    }
    std::size_t c = 0;
    for (long v : row) {
      m(r, c++) = v;
    }
    ++r;
  }
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr == 0 ? 0 : rows.front().size();
  ExactMatrix m(nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    if (rows[r].size() != nc) {
      throw ShapeError("from_rows: ragged rows");
    }
    for (std::size_t c = 0; c < nc; ++c) {
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const auto& v : data_) {
    if (sgn(v) != 0) {
      return false;
    }
  }
  return true;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      t(c, r) = (*this)(r, c);
    }
  }
  return t;
}

ExactMatrix ExactMatrix::block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
  if (r0 + nrows > rows_ || c0 + ncols > cols_) {
    throw ShapeError("block: window exceeds " + shape_str(*this));
  }
  ExactMatrix b(nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r) {
    for (std::size_t c = 0; c < ncols; ++c) {
      b(r, c) = (*this)(r0 + r, c0 + c);
    }
  }
  return b;
}

void ExactMatrix::set_block(std::size_t r0, std::size_t c0, const ExactMatrix& src) {
  if (r0 + src.rows() > rows_ || c0 + src.cols() > cols_) {
    throw ShapeError("set_block: " + shape_str(src) + " does not fit into " + shape_str(*this));
  }
  for (std::size_t r = 0; r < src.rows(); ++r) {
    for (std::size_t c = 0; c < src.cols(); ++c) {
      (*this)(r0 + r, c0 + c) = src(r, c);
    }
  }
}

ExactMatrix ExactMatrix::select_columns(std::span<const std::size_t> indices) const {
  ExactMatrix out(rows_, indices.size());
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (indices[j] >= cols_) {
      throw ShapeError("select_columns: index out of range");
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      out(r, j) = (*this)(r, indices[j]);
    }
  }
  return out;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& rhs) {
  require_same_shape(*this, rhs, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    data_[i] += rhs.data_[i];
  }
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& rhs) {
  require_same_shape(*this, rhs, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    data_[i] -= rhs.data_[i];
  }
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const Rational& s) {
  for (auto& v : data_) {
    v *= s;
  }
  return *this;
}

bool operator==(const ExactMatrix& lhs, const ExactMatrix& rhs) {
  return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.data_ == rhs.data_;
}

ExactMatrix operator+(ExactMatrix lhs, const ExactMatrix& rhs) {
  lhs += rhs;
  return lhs;
}

ExactMatrix operator-(ExactMatrix lhs, const ExactMatrix& rhs) {
  lhs -= rhs;
  return lhs;
}

ExactMatrix operator-(ExactMatrix m) {
  m *= Rational(-1);
  return m;
}

ExactMatrix operator*(const Rational& s, ExactMatrix m) {
  m *= s;
  return m;
}

ExactMatrix operator*(const ExactMatrix& lhs, const ExactMatrix& rhs) {
  return kernels::matmul(lhs, rhs);
}

ExactMatrix hstack(std::span<const ExactMatrix> parts) {
  if (parts.empty()) {
    return {};
  }
  const std::size_t nr = parts.front().rows();
  std::size_t nc = 0;
  for (const auto& p : parts) {
    if (p.rows() != nr) {
      throw ShapeError("hstack: row counts differ");
    }
    nc += p.cols();
  }
  ExactMatrix out(nr, nc);
  std::size_t c0 = 0;
  for (const auto& p : parts) {
    out.set_block(0, c0, p);
    c0 += p.cols();
  }
  return out;
}

ExactMatrix vstack(std::span<const ExactMatrix> parts) {
  if (parts.empty()) {
    return {};
  }
  const std::size_t nc = parts.front().cols();
  std::size_t nr = 0;
  for (const auto& p : parts) {
    if (p.cols() != nc) {
      throw ShapeError("vstack: column counts differ");
    }
    nr += p.rows();
  }
  ExactMatrix out(nr, nc);
  std::size_t r0 = 0;
  for (const auto& p : parts) {
    out.set_block(r0, 0, p);
    r0 += p.rows();
  }
  return out;
}

ExactMatrix hstack(std::initializer_list<ExactMatrix> parts) {
  return hstack(std::span<const ExactMatrix>(parts.begin(), parts.size()));
}

ExactMatrix vstack(std::initializer_list<ExactMatrix> parts) {
  return vstack(std::span<const ExactMatrix>(parts.begin(), parts.size()));
}

ExactMatrix block_diag(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

} // namespace tph
