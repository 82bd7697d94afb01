#include "dctapprox/metrics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dctapprox/dct_core.hpp"
#include "dctapprox/error.hpp"

namespace dctapprox {

namespace {

void require_shape(const Eigen::MatrixXd& m, int n) {
  if (m.rows() != n || m.cols() != n) {
    throw Error(ErrorKind::kShape, "expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix, got " +
                                       std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

}  // namespace

Eigen::MatrixXd ar1_covariance(double rho, int n) {
  if (!(rho > 0.0 && rho < 1.0)) throw Error(ErrorKind::kInvalidModel, "rho must lie in (0, 1)");
  if (n < 2) throw Error(ErrorKind::kInvalidModel, "model size must be at least 2");
  Eigen::MatrixXd r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = std::pow(rho, std::abs(i - j));
  return r;
}

SignalModel::SignalModel(double rho, int n)
    : rho_(rho), n_(n), covariance_(ar1_covariance(rho, n)), dct_(exact_dct_matrix(n)) {}

double total_error_energy(const Eigen::MatrixXd& c_hat, int n) {
  require_shape(c_hat, n);
  return std::numbers::pi * (exact_dct_matrix(n) - c_hat).squaredNorm();
}

double mse(const Eigen::MatrixXd& c_hat, const SignalModel& model) {
  require_shape(c_hat, model.size());
  const Eigen::MatrixXd d = model.dct() - c_hat;
  return (d * model.covariance() * d.transpose()).trace() / model.size();
}

double unified_coding_gain(const Eigen::MatrixXd& c_hat, const SignalModel& model) {
  const int n = model.size();
  require_shape(c_hat, n);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(c_hat);
  if (!lu.isInvertible()) throw Error(ErrorKind::kSingular, "transform matrix is singular");
  const Eigen::MatrixXd g = lu.inverse().transpose();
  const Eigen::MatrixXd& r = model.covariance();
  double log_sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const Eigen::RowVectorXd h = c_hat.row(k);
    // sum of entries of (h h^T) o R = h R h^T
    const double a = h * r * h.transpose();
    const double b = g.row(k).squaredNorm();
    log_sum += std::log10(1.0 / (a * b));
  }
  return 10.0 * log_sum / n;
}

double transform_efficiency(const Eigen::MatrixXd& c_hat, const SignalModel& model) {
  require_shape(c_hat, model.size());
  const Eigen::MatrixXd ry = c_hat * model.covariance() * c_hat.transpose();
  return 100.0 * ry.diagonal().cwiseAbs().sum() / ry.cwiseAbs().sum();
}

MetricsReport evaluate_matrix(const Eigen::MatrixXd& c_hat, const SignalModel& model) {
  MetricsReport m;
  m.epsilon = total_error_energy(c_hat, model.size());
  m.mse = mse(c_hat, model);
  m.coding_gain_db = unified_coding_gain(c_hat, model);
  m.efficiency_pct = transform_efficiency(c_hat, model);
  return m;
}

MetricsReport evaluate(const ParamVector& a, const SignalModel& model) {
  if (model.size() != 8) throw Error(ErrorKind::kShape, "8-point parameters need an 8-point signal model");
  MetricsReport m = evaluate_matrix(orthonormal_approx(a).composed(), model);
  const ComplexityCount c = complexity(a);
  m.additions = c.additions;
  m.shifts = c.shifts;
  return m;
}

}  // namespace dctapprox
