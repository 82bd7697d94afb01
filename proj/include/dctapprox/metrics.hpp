#pragma once

#include <optional>

#include <Eigen/Dense>

#include "dctapprox/fast_kernel.hpp"
#include "dctapprox/params.hpp"

namespace dctapprox {

inline constexpr double kDefaultRho = 0.95;

/// First-order Markov (AR(1)) signal model with covariance rho^|i-j|.
class SignalModel {
 public:
  /// Throws Error(kInvalidModel) unless 0 < rho < 1 and n >= 2.
  SignalModel(double rho, int n);

  double rho() const { return rho_; }
  int size() const { return n_; }
  const Eigen::MatrixXd& covariance() const { return covariance_; }
  const Eigen::MatrixXd& dct() const { return dct_; }

  /// Same correlation at another size.
  SignalModel resized(int n) const { return SignalModel(rho_, n); }

 private:
  double rho_;
  int n_;
  Eigen::MatrixXd covariance_;
  Eigen::MatrixXd dct_;
};

Eigen::MatrixXd ar1_covariance(double rho, int n);

/// pi * ||C_N - C_hat||_F^2.
double total_error_energy(const Eigen::MatrixXd& c_hat, int n);

/// (1/N) trace[(C_N - C_hat) R_x (C_N - C_hat)^T].
double mse(const Eigen::MatrixXd& c_hat, const SignalModel& model);

/// 10 log10 prod_k [1 / (A_k B_k)]^(1/N) with A_k the sum of the entries of
/// (h_k h_k^T) o R_x and B_k = ||g_k||^2, g_k the rows of C_hat^{-T}.
/// Throws Error(kSingular) for a singular C_hat.
double unified_coding_gain(const Eigen::MatrixXd& c_hat, const SignalModel& model);

/// 100 * sum_i |R_y(i,i)| / sum_ij |R_y(i,j)| with R_y = C_hat R_x C_hat^T.
double transform_efficiency(const Eigen::MatrixXd& c_hat, const SignalModel& model);

struct MetricsReport {
  double epsilon = 0.0;
  double mse = 0.0;
  double coding_gain_db = 0.0;
  double efficiency_pct = 0.0;
  int additions = 0;
  int shifts = 0;
};

/// Proximity and coding metrics only (additions/shifts left at zero).
MetricsReport evaluate_matrix(const Eigen::MatrixXd& c_hat, const SignalModel& model);

/// All four metrics of S(a) T(a) plus complexity(a). The model size must be 8.
/// Throws Error(kInfeasible) when `a` is not feasible.
MetricsReport evaluate(const ParamVector& a, const SignalModel& model);

}  // namespace dctapprox
