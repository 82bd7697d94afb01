#include "dctapprox/dyadic_matrix.hpp"

#include <string>

#include "dctapprox/error.hpp"

namespace dctapprox {

namespace {

bool is_power_of_two(std::int64_t v) { return v > 0 && (v & (v - 1)) == 0; }

}  // namespace

DyadicMatrix::DyadicMatrix(int rows, int cols, std::int64_t denominator)
    : rows_(rows), cols_(cols), den_(denominator) {
  if (rows <= 0 || cols <= 0) throw Error(ErrorKind::kShape, "matrix dimensions must be positive");
  if (!is_power_of_two(denominator)) {
    throw Error(ErrorKind::kInvalidParameter, "denominator must be a positive power of two");
  }
  entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

DyadicMatrix DyadicMatrix::identity(int n, std::int64_t denominator) {
  DyadicMatrix m(n, n, denominator);
  for (int i = 0; i < n; ++i) m.num(i, i) = denominator;
  return m;
}

DyadicMatrix DyadicMatrix::from_numerators(int rows, int cols, std::vector<std::int64_t> numerators,
                                           std::int64_t denominator) {
  DyadicMatrix m(rows, cols, denominator);
  if (numerators.size() != m.entries_.size()) {
    throw Error(ErrorKind::kShape, "expected " + std::to_string(m.entries_.size()) + " entries, got " +
                                       std::to_string(numerators.size()));
  }
  m.entries_ = std::move(numerators);
  return m;
}

DyadicMatrix DyadicMatrix::rescaled(std::int64_t denominator) const {
  if (!is_power_of_two(denominator) || denominator % den_ != 0) {
    throw Error(ErrorKind::kInvalidParameter, "cannot rescale to a non-multiple denominator");
  }
  DyadicMatrix out = *this;
  const std::int64_t factor = denominator / den_;
  for (auto& e : out.entries_) e *= factor;
  out.den_ = denominator;
  return out;
}

DyadicMatrix DyadicMatrix::reduced() const {
  DyadicMatrix out = *this;
  while (out.den_ > 1) {
    bool all_even = true;
    for (auto e : out.entries_) {
      if (e % 2 != 0) {
        all_even = false;
        break;
      }
    }
    if (!all_even) break;
    for (auto& e : out.entries_) e /= 2;
    out.den_ /= 2;
  }
  return out;
}

DyadicMatrix DyadicMatrix::transpose() const {
  DyadicMatrix out(cols_, rows_, den_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.num(c, r) = num(r, c);
  return out;
}

Eigen::MatrixXd DyadicMatrix::to_real() const {
  Eigen::MatrixXd m(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m(r, c) = value(r, c);
  return m;
}

DyadicMatrix operator*(const DyadicMatrix& lhs, const DyadicMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) {
    throw Error(ErrorKind::kShape, "product shape mismatch: " + std::to_string(lhs.rows_) + "x" +
                                       std::to_string(lhs.cols_) + " * " + std::to_string(rhs.rows_) +
                                       "x" + std::to_string(rhs.cols_));
  }
  DyadicMatrix out(lhs.rows_, rhs.cols_, lhs.den_ * rhs.den_);
  for (int r = 0; r < lhs.rows_; ++r) {
    for (int k = 0; k < lhs.cols_; ++k) {
      const std::int64_t a = lhs.num(r, k);
      if (a == 0) continue;
      for (int c = 0; c < rhs.cols_; ++c) out.num(r, c) += a * rhs.num(k, c);
    }
  }
  return out;
}

bool operator==(const DyadicMatrix& lhs, const DyadicMatrix& rhs) {
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) return false;
  for (std::size_t i = 0; i < lhs.entries_.size(); ++i) {
    if (lhs.entries_[i] * rhs.den_ != rhs.entries_[i] * lhs.den_) return false;
  }
  return true;
}

bool DyadicMatrix::is_diagonal() const {
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (r != c && num(r, c) != 0) return false;
  return true;
}

DyadicMatrix gram(const DyadicMatrix& t) {
  if (!t.square()) throw Error(ErrorKind::kShape, "gram requires a square matrix");
  return t * t.transpose();
}

}  // namespace dctapprox
