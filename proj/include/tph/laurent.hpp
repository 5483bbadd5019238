#pragma once

#include "tph/matrix.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace tph {

/// Matrix Laurent polynomial sum_k C_k z^k with exact coefficients.
///
/// Only nonzero coefficients are stored, so lo()/hi() are the true extreme
/// powers; the zero function has no coefficients and is_zero() is true.
class LaurentMatrix {
public:
  LaurentMatrix() = default;
  LaurentMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  /// z^power * m.
  static LaurentMatrix monomial(const ExactMatrix& m, int power);
  static LaurentMatrix identity(std::size_t n) { return monomial(ExactMatrix::identity(n), 0); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest / highest stored power. Precondition: !is_zero().
  int lo() const;
  int hi() const;

  /// Coefficient at z^power (a zero matrix when absent).
  ExactMatrix coeff(int power) const;
  void set_coeff(int power, const ExactMatrix& c);
  /// Adds c to the coefficient at z^power.
  void add_coeff(int power, const ExactMatrix& c);
  const std::map<int, ExactMatrix>& coefficients() const { return coeffs_; }

  /// z^k * (*this).
  LaurentMatrix shifted(int k) const;
  LaurentMatrix transpose() const;
  LaurentMatrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
  LaurentMatrix select_columns(const std::vector<std::size_t>& indices) const;
  /// Same function with every coefficient of column j scaled by z^shifts[j].
  LaurentMatrix shift_columns(const std::vector<int>& shifts) const;
  /// Keeps only the terms with lo_power <= k <= hi_power.
  LaurentMatrix truncated(int lo_power, int hi_power) const;
  /// Value at a rational point z = x. Requires x != 0 whenever negative powers exist.
  ExactMatrix evaluate(const Rational& x) const;

  LaurentMatrix& operator+=(const LaurentMatrix& rhs);
  LaurentMatrix& operator-=(const LaurentMatrix& rhs);
  LaurentMatrix& operator*=(const Rational& s);

  friend bool operator==(const LaurentMatrix& lhs, const LaurentMatrix& rhs);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<int, ExactMatrix> coeffs_;
};

LaurentMatrix operator+(LaurentMatrix lhs, const LaurentMatrix& rhs);
LaurentMatrix operator-(LaurentMatrix lhs, const LaurentMatrix& rhs);
LaurentMatrix operator*(const Rational& s, LaurentMatrix m);

/// Product of matrix Laurent polynomials: coefficient k is sum_j A_j B_{k-j}.
LaurentMatrix lmul(const LaurentMatrix& a, const LaurentMatrix& b);

LaurentMatrix hstack(const std::vector<LaurentMatrix>& parts);
LaurentMatrix vstack(const std::vector<LaurentMatrix>& parts);

} // namespace tph
