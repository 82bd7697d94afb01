#include "dctapprox/dct_core.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dctapprox/error.hpp"

namespace dctapprox {

Eigen::MatrixXd exact_dct_matrix(int n) {
  if (n < 2) throw Error(ErrorKind::kInvalidSize, "DCT size must be at least 2, got " + std::to_string(n));
  Eigen::MatrixXd c(n, n);
  const double dc = std::sqrt(1.0 / n);
  const double ac = std::sqrt(2.0 / n);
  for (int i = 0; i < n; ++i) {
    const double alpha = i == 0 ? dc : ac;
    for (int j = 0; j < n; ++j) {
      c(i, j) = alpha * std::cos(std::numbers::pi * i * (2 * j + 1) / (2.0 * n));
    }
  }
  return c;
}

DyadicMatrix build_t(const ParamVector& a) {
  // Doubled parameters; the fixed +-1 entries become +-2.
  const std::int64_t a1 = a.doubled(0), a2 = a.doubled(1), a3 = a.doubled(2), a4 = a.doubled(3);
  const std::int64_t a5 = a.doubled(4), a6 = a.doubled(5), a7 = a.doubled(6), a8 = a.doubled(7);
  return DyadicMatrix::from_numerators(8, 8, {
      2,  2,   2,   2,   2,   2,   2,   2,
      2,  2,   a1,  a1,  -a1, -a1, -2,  -2,
      2,  a2,  -a2, -2,  -2,  -a2, a2,  2,
      a1, a3,  -a4, -a1, a1,  a4,  -a3, -a1,
      2,  -2,  -2,  2,   2,   -2,  -2,  2,
      a5, -a5, -a1, a6,  -a6, a1,  a5,  -a5,
      a2, -2,  2,   -a2, -a2, 2,   -2,  a2,
      a7, -a6, a1,  -a8, a8,  -a1, a6,  -a7,
  });
}

bool GramDiagnostics::diagonal_positive() const {
  for (int k = 0; k < 5; ++k)
    if (tau_x4[static_cast<std::size_t>(k)] <= 0) return false;
  return true;
}

GramDiagnostics gram_diagnostics(const ParamVector& a) {
  // With d_i = 2 a_i, each tau is quadratic in a, so 4*tau is an integer
  // polynomial in d.
  const std::int64_t d1 = a.doubled(0), d2 = a.doubled(1), d3 = a.doubled(2), d4 = a.doubled(3);
  const std::int64_t d5 = a.doubled(4), d6 = a.doubled(5), d7 = a.doubled(6), d8 = a.doubled(7);
  GramDiagnostics g;
  auto& t = g.tau_x4;
  t[0] = 4 * d1 * d1 + 16;
  t[1] = 4 * d2 * d2 + 16;
  t[2] = 4 * d1 * d1 + 2 * d3 * d3 + 2 * d4 * d4;
  t[3] = 2 * d6 * d6 + 4 * d5 * d5 + 2 * d1 * d1;
  t[4] = 2 * d8 * d8 + 2 * d7 * d7 + 2 * d6 * d6 + 2 * d1 * d1;
  t[5] = 4 * d1 - 2 * d1 * d1 + 4 * d3 - 2 * d1 * d4;
  t[6] = 2 * d1 * d6 - 2 * d1 * d1;
  t[7] = 2 * d1 * d1 - 4 * d6 + 4 * d7 - 2 * d1 * d8;
  t[8] = 2 * d1 * d4 + 2 * d1 * d5 - 2 * d3 * d5 - 2 * d1 * d6;
  t[9] = 2 * d1 * d8 + 2 * d1 * d7 - 2 * d3 * d6 - 2 * d1 * d4;
  t[10] = 2 * d5 * d7 + 2 * d5 * d6 - 2 * d1 * d1 - 2 * d6 * d8;
  g.off_diagonal_zero = true;
  for (std::size_t k = 5; k < 11; ++k)
    if (t[k] != 0) g.off_diagonal_zero = false;
  return g;
}

bool is_feasible(const ParamVector& a) {
  const auto g = gram_diagnostics(a);
  return g.off_diagonal_zero && g.diagonal_positive();
}

std::vector<double> scaling_diag(const ParamVector& a) {
  const auto g = gram_diagnostics(a);
  if (!(g.off_diagonal_zero && g.diagonal_positive())) {
    throw Error(ErrorKind::kInfeasible, "parameters " + a.to_string() + " do not give an orthogonal matrix");
  }
  const double fixed = 1.0 / (2.0 * std::numbers::sqrt2);
  auto inv_sqrt = [&](int k) { return 1.0 / std::sqrt(g.tau(k)); };
  return {fixed, inv_sqrt(1), inv_sqrt(2), inv_sqrt(3), fixed, inv_sqrt(4), inv_sqrt(2), inv_sqrt(5)};
}

OrthonormalTransform::OrthonormalTransform(DyadicMatrix integer_part, std::vector<double> scale)
    : integer_part_(std::move(integer_part)), scale_(std::move(scale)) {
  if (!integer_part_.square()) throw Error(ErrorKind::kShape, "transform matrix must be square");
  if (scale_.size() != static_cast<std::size_t>(integer_part_.rows())) {
    throw Error(ErrorKind::kShape, "scale length does not match transform size");
  }
}

OrthonormalTransform OrthonormalTransform::from_integer_part(DyadicMatrix integer_part) {
  const DyadicMatrix g = gram(integer_part);
  if (!g.is_diagonal()) throw Error(ErrorKind::kInfeasible, "integer part is not orthogonal");
  std::vector<double> scale(static_cast<std::size_t>(g.rows()));
  for (int k = 0; k < g.rows(); ++k) {
    if (g.num(k, k) <= 0) throw Error(ErrorKind::kInfeasible, "integer part has a zero row");
    scale[static_cast<std::size_t>(k)] = 1.0 / std::sqrt(g.value(k, k));
  }
  return OrthonormalTransform(std::move(integer_part), std::move(scale));
}

Eigen::MatrixXd OrthonormalTransform::composed() const {
  Eigen::MatrixXd m = integer_part_.to_real();
  for (int k = 0; k < m.rows(); ++k) m.row(k) *= scale_[static_cast<std::size_t>(k)];
  return m;
}

OrthonormalTransform orthonormal_approx(const ParamVector& a) {
  return OrthonormalTransform(build_t(a), scaling_diag(a));
}

}  // namespace dctapprox
