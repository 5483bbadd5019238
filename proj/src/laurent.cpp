#include "tph/laurent.hpp"

#include "tph/errors.hpp"

#include <string>

namespace tph {

namespace {

void require_shape(const LaurentMatrix& l, const ExactMatrix& c, const char* what) {
  if (c.rows() != l.rows() || c.cols() != l.cols()) {
    throw ShapeError(std::string(what) + ": coefficient shape does not match " + std::to_string(l.rows()) +
                     "x" + std::to_string(l.cols()));
  }
}

void require_same(const LaurentMatrix& a, const LaurentMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(what) + ": Laurent matrix shapes differ");
  }
}

} // namespace

LaurentMatrix LaurentMatrix::monomial(const ExactMatrix& m, int power) {
  LaurentMatrix l(m.rows(), m.cols());
  l.set_coeff(power, m);
  return l;
}

int LaurentMatrix::lo() const {
  if (coeffs_.empty()) {
    throw PreconditionError("lo(): zero Laurent matrix has no powers");
  }
  return coeffs_.begin()->first;
}

int LaurentMatrix::hi() const {
  if (coeffs_.empty()) {
    throw PreconditionError("hi(): zero Laurent matrix has no powers");
  }
  return coeffs_.rbegin()->first;
}

ExactMatrix LaurentMatrix::coeff(int power) const {
  const auto it = coeffs_.find(power);
  return it == coeffs_.end() ? ExactMatrix(rows_, cols_) : it->second;
}

void LaurentMatrix::set_coeff(int power, const ExactMatrix& c) {
  require_shape(*this, c, "set_coeff");
  if (c.is_zero()) {
    coeffs_.erase(power);
  } else {
    coeffs_[power] = c;
  }
}

void LaurentMatrix::add_coeff(int power, const ExactMatrix& c) {
  require_shape(*this, c, "add_coeff");
  auto it = coeffs_.find(power);
  if (it == coeffs_.end()) {
    if (!c.is_zero()) {
      coeffs_.emplace(power, c);
    }
    return;
  }
  it->second += c;
  if (it->second.is_zero()) {
    coeffs_.erase(it);
  }
}

LaurentMatrix LaurentMatrix::shifted(int k) const {
  LaurentMatrix out(rows_, cols_);
  for (const auto& [p, c] : coeffs_) {
    out.coeffs_.emplace(p + k, c);
  }
  return out;
}

LaurentMatrix LaurentMatrix::transpose() const {
  LaurentMatrix out(cols_, rows_);
  for (const auto& [p, c] : coeffs_) {
    out.coeffs_.emplace(p, c.transpose());
  }
  return out;
}

LaurentMatrix LaurentMatrix::block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
  if (r0 + nrows > rows_ || c0 + ncols > cols_) {
    throw ShapeError("LaurentMatrix::block: window exceeds shape");
  }
  LaurentMatrix out(nrows, ncols);
  for (const auto& [p, c] : coeffs_) {
    out.set_coeff(p, c.block(r0, c0, nrows, ncols));
  }
  return out;
}

LaurentMatrix LaurentMatrix::select_columns(const std::vector<std::size_t>& indices) const {
  LaurentMatrix out(rows_, indices.size());
  for (const auto& [p, c] : coeffs_) {
    out.set_coeff(p, c.select_columns(indices));
  }
  return out;
}

LaurentMatrix LaurentMatrix::shift_columns(const std::vector<int>& shifts) const {
  if (shifts.size() != cols_) {
    throw ShapeError("shift_columns: one shift per column required");
  }
  LaurentMatrix out(rows_, cols_);
  for (const auto& [p, c] : coeffs_) {
    for (std::size_t j = 0; j < cols_; ++j) {
      ExactMatrix col(rows_, cols_);
      bool any = false;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (sgn(c(r, j)) != 0) {
          col(r, j) = c(r, j);
          any = true;
        }
      }
      if (any) {
        out.add_coeff(p + shifts[j], col);
      }
    }
  }
  return out;
}

LaurentMatrix LaurentMatrix::truncated(int lo_power, int hi_power) const {
  LaurentMatrix out(rows_, cols_);
  for (const auto& [p, c] : coeffs_) {
    if (p >= lo_power && p <= hi_power) {
      out.coeffs_.emplace(p, c);
    }
  }
  return out;
}

ExactMatrix LaurentMatrix::evaluate(const Rational& x) const {
  ExactMatrix out(rows_, cols_);
  for (const auto& [p, c] : coeffs_) {
    if (p < 0 && sgn(x) == 0) {
      throw PreconditionError("evaluate: negative power at z = 0");
    }
    Rational xp = 1;
    mpq_class base = p < 0 ? Rational(1 / x) : x;
    for (int i = 0; i < (p < 0 ? -p : p); ++i) {
      xp *= base;
    }
    out += xp * c;
  }
  return out;
}

LaurentMatrix& LaurentMatrix::operator+=(const LaurentMatrix& rhs) {
  require_same(*this, rhs, "operator+");
  for (const auto& [p, c] : rhs.coeffs_) {
    add_coeff(p, c);
  }
  return *this;
}

LaurentMatrix& LaurentMatrix::operator-=(const LaurentMatrix& rhs) {
  require_same(*this, rhs, "operator-");
  for (const auto& [p, c] : rhs.coeffs_) {
    add_coeff(p, -c);
  }
  return *this;
}

LaurentMatrix& LaurentMatrix::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [p, c] : coeffs_) {
    c *= s;
  }
  return *this;
}

bool operator==(const LaurentMatrix& lhs, const LaurentMatrix& rhs) {
  return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.coeffs_ == rhs.coeffs_;
}

LaurentMatrix operator+(LaurentMatrix lhs, const LaurentMatrix& rhs) {
  lhs += rhs;
  return lhs;
}

LaurentMatrix operator-(LaurentMatrix lhs, const LaurentMatrix& rhs) {
  lhs -= rhs;
  return lhs;
}

LaurentMatrix operator*(const Rational& s, LaurentMatrix m) {
  m *= s;
  return m;
}

LaurentMatrix lmul(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("lmul: inner dimensions differ");
  }
  LaurentMatrix out(a.rows(), b.cols());
  for (const auto& [pa, ca] : a.coefficients()) {
    for (const auto& [pb, cb] : b.coefficients()) {
      out.add_coeff(pa + pb, ca * cb);
    }
  }
  return out;
}

LaurentMatrix hstack(const std::vector<LaurentMatrix>& parts) {
  if (parts.empty()) {
    return {};
  }
  std::size_t nc = 0;
  for (const auto& p : parts) {
    if (p.rows() != parts.front().rows()) {
      throw ShapeError("hstack: row counts differ");
    }
    nc += p.cols();
  }
  LaurentMatrix out(parts.front().rows(), nc);
  std::size_t c0 = 0;
  for (const auto& p : parts) {
    for (const auto& [k, c] : p.coefficients()) {
      ExactMatrix wide(out.rows(), nc);
      wide.set_block(0, c0, c);
      out.add_coeff(k, wide);
    }
    c0 += p.cols();
  }
  return out;
}

LaurentMatrix vstack(const std::vector<LaurentMatrix>& parts) {
  if (parts.empty()) {
    return {};
  }
  std::vector<LaurentMatrix> transposed;
  transposed.reserve(parts.size());
  for (const auto& p : parts) {
    transposed.push_back(p.transpose());
  }
  return hstack(transposed).transpose();
}

} // namespace tph
