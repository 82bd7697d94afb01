#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "dctapprox/dct_core.hpp"
#include "dctapprox/error.hpp"
#include "dctapprox/metrics.hpp"
#include "known_tables.hpp"
#include "test_support.hpp"

using namespace dctapprox;
using namespace dctapprox::testing;

namespace {

// Independent reference implementations, written with plain loops.

double oracle_dct(int i, int j, int n) {
  const double alpha = i == 0 ? std::sqrt(1.0 / n) : std::sqrt(2.0 / n);
  return alpha * std::cos(std::numbers::pi * i * (2 * j + 1) / (2.0 * n));
}

// sum_k of the integral over [0, pi] of |H_k - Hhat_k|^2, composite Simpson.
double oracle_error_energy(const Eigen::MatrixXd& c_hat) {
  const int n = static_cast<int>(c_hat.rows());
  constexpr int kSteps = 4000;
  const double h = std::numbers::pi / kSteps;
  double total = 0.0;
  for (int s = 0; s <= kSteps; ++s) {
    const double w = s * h;
    const double weight = (s == 0 || s == kSteps) ? 1.0 : (s % 2 ? 4.0 : 2.0);
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
      std::complex<double> resp = 0.0;
      for (int t = 0; t < n; ++t) resp += (oracle_dct(k, t, n) - c_hat(k, t)) * std::polar(1.0, -w * t);
      sum += std::norm(resp);
    }
    total += weight * sum;
  }
  return total * h / 3.0;
}

double oracle_mse(const Eigen::MatrixXd& c_hat, double rho) {
  const int n = static_cast<int>(c_hat.rows());
  double acc = 0.0;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        acc += (oracle_dct(k, i, n) - c_hat(k, i)) * std::pow(rho, std::abs(i - j)) * (oracle_dct(k, j, n) - c_hat(k, j));
  return acc / n;
}

// Coding gain of an orthonormal transform via the Hadamard-product sums.
double oracle_coding_gain_orthonormal(const Eigen::MatrixXd& c, double rho) {
  const int n = static_cast<int>(c.rows());
  double log_sum = 0.0;
  for (int k = 0; k < n; ++k) {
    double a = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a += c(k, i) * c(k, j) * std::pow(rho, std::abs(i - j));
    double b = 0.0;
    for (int i = 0; i < n; ++i) b += c(k, i) * c(k, i);
    log_sum += std::log10(1.0 / (a * b));
  }
  return 10.0 * log_sum / n;
}

Eigen::MatrixXd oracle_dct_matrix(int n) {
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = oracle_dct(i, j, n);
  return m;
}

}  // namespace

TEST_CASE("ar1_covariance") {
  const Eigen::MatrixXd r2 = ar1_covariance(0.95, 2);
  CHECK(r2(0, 0) == 1.0);
  CHECK(r2(0, 1) == 0.95);
  CHECK(r2(1, 0) == 0.95);
  const Eigen::MatrixXd r8 = ar1_covariance(0.95, 8);
  for (int i = 0; i < 8; ++i) CHECK(r8(i, i) == 1.0);
  CHECK(r8(0, 7) == doctest::Approx(0.698337296).epsilon(1e-9));
  CHECK_THROWS_AS(ar1_covariance(1.0, 8), Error);
  CHECK_THROWS_AS(ar1_covariance(0.0, 8), Error);
  CHECK_THROWS_AS(SignalModel(-0.2, 8), Error);
}

TEST_CASE("exact DCT calibration") {
  const SignalModel model(0.95, 8);
  const Eigen::MatrixXd c = exact_dct_matrix(8);
  const MetricsReport m = evaluate_matrix(c, model);
  CHECK(std::abs(m.epsilon) < 1e-12);
  CHECK(std::abs(m.mse) < 1e-12);
  const double oracle = oracle_coding_gain_orthonormal(oracle_dct_matrix(8), 0.95);
  CHECK(oracle == doctest::Approx(8.825909175731963).epsilon(1e-12));
  CHECK(m.coding_gain_db == doctest::Approx(oracle).epsilon(1e-12));
  CHECK(m.efficiency_pct == doctest::Approx(93.9911924468191).epsilon(1e-10));
}

TEST_CASE("metric implementations agree with independent oracles") {
  const SignalModel model(0.95, 8);
  for (const auto& a : known_optimal()) {
    const Eigen::MatrixXd c = orthonormal_approx(a).composed();
    CHECK(total_error_energy(c, 8) == doctest::Approx(oracle_error_energy(c)).epsilon(1e-9));
    CHECK(mse(c, model) == doctest::Approx(oracle_mse(c, 0.95)).epsilon(1e-12));
    CHECK(unified_coding_gain(c, model) == doctest::Approx(oracle_coding_gain_orthonormal(c, 0.95)).epsilon(1e-12));
  }
}

TEST_CASE("metrics reproduce the published 8-point table") {
  const SignalModel model(0.95, 8);
  for (int j = 1; j <= 15; ++j) {
    CAPTURE(j);
    const MetricsReport m = evaluate(known(j), model);
    const TableRow& t = kMetrics8[static_cast<std::size_t>(j - 1)];
    CHECK(std::abs(m.epsilon - t.epsilon) <= kTolEpsilon);
    CHECK(std::abs(m.mse - t.mse) <= kTolMse);
    CHECK(std::abs(m.coding_gain_db - t.cg) <= kTolCg);
    CHECK(std::abs(m.efficiency_pct - t.eta) <= kTolEta);
    CHECK(m.additions == t.additions);
    CHECK(m.shifts == t.shifts);
  }
}

TEST_CASE("KLT has full transform efficiency") {
  const SignalModel model(0.95, 8);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(model.covariance());
  const Eigen::MatrixXd klt = eig.eigenvectors().transpose();
  CHECK(transform_efficiency(klt, model) == doctest::Approx(100.0).epsilon(1e-9));
}

TEST_CASE("coding gain and efficiency ignore row signs") {
  const SignalModel model(0.95, 8);
  std::mt19937_64 rng(23);
  for (const auto& a : known_optimal()) {
    const Eigen::MatrixXd c = orthonormal_approx(a).composed();
    Eigen::MatrixXd flipped = c;
    for (int k = 0; k < 8; ++k)
      if (rng() & 1) flipped.row(k) *= -1.0;
    CHECK(unified_coding_gain(flipped, model) == doctest::Approx(unified_coding_gain(c, model)).epsilon(1e-12));
    CHECK(transform_efficiency(flipped, model) == doctest::Approx(transform_efficiency(c, model)).epsilon(1e-12));
  }
}

TEST_CASE("MSE obeys the trace bound and proximity metrics vanish only at the DCT") {
  const SignalModel model(0.95, 8);
  const double lambda_max = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(model.covariance()).eigenvalues().maxCoeff();
  for (const auto& a : known_optimal()) {
    const Eigen::MatrixXd c = orthonormal_approx(a).composed();
    const double eps = total_error_energy(c, 8);
    CHECK(mse(c, model) <= eps / (std::numbers::pi * 8) * lambda_max + 1e-15);
    CHECK(eps > 1e-12);
  }
}

TEST_CASE("metric errors") {
  const SignalModel model(0.95, 8);
  CHECK_THROWS_AS(mse(Eigen::MatrixXd::Identity(4, 4), model), Error);
  CHECK_THROWS_AS(total_error_energy(Eigen::MatrixXd::Identity(4, 4), 8), Error);
  try {
    unified_coding_gain(Eigen::MatrixXd::Zero(8, 8), model);
    FAIL("expected singular");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kSingular);
  }
  CHECK_THROWS_AS(evaluate(ParamVector{}, model), Error);
  CHECK_THROWS_AS(evaluate(known(1), SignalModel(0.95, 16)), Error);
}
