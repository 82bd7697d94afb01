#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace dctapprox {

/// Exact matrix whose entries are `numerator / denominator` with a shared
/// power-of-two denominator. Low-complexity transforms use denominator 2, so
/// every value of {0, ±1/2, ±1, ±2} is an integer numerator.
class DyadicMatrix {
 public:
  DyadicMatrix() = default;
  DyadicMatrix(int rows, int cols, std::int64_t denominator = 2);

  static DyadicMatrix identity(int n, std::int64_t denominator = 2);
  /// Builds from numerators given row by row.
  static DyadicMatrix from_numerators(int rows, int cols, std::vector<std::int64_t> numerators,
                                      std::int64_t denominator = 2);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  std::int64_t denominator() const { return den_; }

  std::int64_t& num(int r, int c) { return entries_[index(r, c)]; }
  std::int64_t num(int r, int c) const { return entries_[index(r, c)]; }
  double value(int r, int c) const { return static_cast<double>(num(r, c)) / static_cast<double>(den_); }
  const std::vector<std::int64_t>& numerators() const { return entries_; }

  /// Returns the same matrix expressed over `denominator` (must be a multiple
  /// of the current one).
  DyadicMatrix rescaled(std::int64_t denominator) const;
  /// Divides out common factors of two between the entries and denominator.
  DyadicMatrix reduced() const;

  DyadicMatrix transpose() const;
  Eigen::MatrixXd to_real() const;

  /// Exact product; the denominator of the result is the product of both.
  friend DyadicMatrix operator*(const DyadicMatrix& lhs, const DyadicMatrix& rhs);
  /// Value equality (independent of the chosen denominator).
  friend bool operator==(const DyadicMatrix& lhs, const DyadicMatrix& rhs);

  /// True when every off-diagonal entry is exactly zero.
  bool is_diagonal() const;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::int64_t den_ = 2;
  std::vector<std::int64_t> entries_;
};

/// Exact T * T^T.
DyadicMatrix gram(const DyadicMatrix& t);

}  // namespace dctapprox
