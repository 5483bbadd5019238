#pragma once

#include "tph/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace tph {

/// Dense row-major matrix of exact rationals. Empty shapes (0 rows or 0 cols)
/// are valid and show up for degenerate block counts.
class ExactMatrix {
public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);

  /// Integer literal constructor for tests and fixtures: {{1, 2}, {3, 4}}.
  static ExactMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static ExactMatrix identity(std::size_t n);
  static ExactMatrix zero(std::size_t rows, std::size_t cols) { return ExactMatrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  bool is_zero() const;

  ExactMatrix transpose() const;
  ExactMatrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t r0, std::size_t c0, const ExactMatrix& src);
  ExactMatrix column(std::size_t c) const { return block(0, c, rows_, 1); }
  /// Columns picked by index, in the given order.
  ExactMatrix select_columns(std::span<const std::size_t> indices) const;

  ExactMatrix& operator+=(const ExactMatrix& rhs);
  ExactMatrix& operator-=(const ExactMatrix& rhs);
  ExactMatrix& operator*=(const Rational& s);

  friend bool operator==(const ExactMatrix& lhs, const ExactMatrix& rhs);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

ExactMatrix operator+(ExactMatrix lhs, const ExactMatrix& rhs);
ExactMatrix operator-(ExactMatrix lhs, const ExactMatrix& rhs);
ExactMatrix operator-(ExactMatrix m);
ExactMatrix operator*(const Rational& s, ExactMatrix m);
/// Matrix product; dispatches to the OpenMP kernel for large operands.
ExactMatrix operator*(const ExactMatrix& lhs, const ExactMatrix& rhs);

ExactMatrix hstack(std::span<const ExactMatrix> parts);
ExactMatrix vstack(std::span<const ExactMatrix> parts);
ExactMatrix hstack(std::initializer_list<ExactMatrix> parts);
ExactMatrix vstack(std::initializer_list<ExactMatrix> parts);
ExactMatrix block_diag(const ExactMatrix& a, const ExactMatrix& b);

} // namespace tph
