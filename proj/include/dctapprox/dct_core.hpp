#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "dctapprox/dyadic_matrix.hpp"
#include "dctapprox/params.hpp"

namespace dctapprox {

/// Orthonormal DCT-II matrix of size n: c(i,j) = alpha_i cos(pi i (2j+1) / 2n).
/// Throws Error(kInvalidSize) for n < 2.
Eigen::MatrixXd exact_dct_matrix(int n);

/// The 8x8 low-complexity matrix T(a), entries stored over denominator 2.
DyadicMatrix build_t(const ParamVector& a);

/// Closed-form entries of T(a) T(a)^T. Values are kept as 4*tau so that they
/// are exact integers.
struct GramDiagnostics {
  /// 4*tau_k for k = 1..11 lives at index k - 1.
  std::array<std::int64_t, 11> tau_x4{};
  bool off_diagonal_zero = false;

  double tau(int k) const { return static_cast<double>(tau_x4[static_cast<std::size_t>(k - 1)]) / 4.0; }
  /// The five diagonal candidates tau1..tau5 are all strictly positive.
  bool diagonal_positive() const;
};

GramDiagnostics gram_diagnostics(const ParamVector& a);

/// Orthogonal (diagonal, nonsingular Gram) for the given parameters.
bool is_feasible(const ParamVector& a);

/// diag(1/(2 sqrt 2), 1/sqrt(tau1), 1/sqrt(tau2), 1/sqrt(tau3), 1/(2 sqrt 2),
///      1/sqrt(tau4), 1/sqrt(tau2), 1/sqrt(tau5)).
/// Throws Error(kInfeasible) when `a` is not feasible.
std::vector<double> scaling_diag(const ParamVector& a);

/// An orthonormal approximation diag(scale) * integer_part for any size.
class OrthonormalTransform {
 public:
  OrthonormalTransform() = default;
  OrthonormalTransform(DyadicMatrix integer_part, std::vector<double> scale);

  /// Derives the scale from the exact Gram diagonal. Throws Error(kInfeasible)
  /// unless the Gram matrix is diagonal with a strictly positive diagonal.
  static OrthonormalTransform from_integer_part(DyadicMatrix integer_part);

  int size() const { return integer_part_.rows(); }
  const DyadicMatrix& integer_part() const { return integer_part_; }
  const std::vector<double>& scale() const { return scale_; }

  /// diag(scale) * integer_part as a real matrix.
  Eigen::MatrixXd composed() const;

 private:
  DyadicMatrix integer_part_;
  std::vector<double> scale_;
};

/// S(a) * T(a). Throws Error(kInfeasible) when `a` is not feasible.
OrthonormalTransform orthonormal_approx(const ParamVector& a);

}  // namespace dctapprox
