#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "dctapprox/dct_core.hpp"
#include "dctapprox/image.hpp"

namespace dctapprox {

/// B = C A C^T.
Eigen::MatrixXd forward_2d(const Eigen::MatrixXd& transform, const Eigen::MatrixXd& block);
Eigen::MatrixXd forward_2d(const OrthonormalTransform& transform, const Eigen::MatrixXd& block);

/// A = C^T B C.
Eigen::MatrixXd inverse_2d(const Eigen::MatrixXd& transform, const Eigen::MatrixXd& block);
Eigen::MatrixXd inverse_2d(const OrthonormalTransform& transform, const Eigen::MatrixXd& block);

struct BlockPosition {
  int row = 0;
  int col = 0;

  friend bool operator==(const BlockPosition&, const BlockPosition&) = default;
};

/// JPEG-style zig-zag over an n x n grid: (0,0), (0,1), (1,0), (2,0), ...
std::vector<BlockPosition> zigzag_order(int n);

/// Keep the first round(r N^2) zig-zag coefficients of each block.
class RetentionPolicy {
 public:
  /// Throws Error(kPolicy) unless 0 < r <= 1.
  explicit RetentionPolicy(double r);

  double fraction() const { return r_; }
  int retained_count(int n) const;

 private:
  double r_;
};

/// Zeros every coefficient past the retained zig-zag prefix.
Eigen::MatrixXd retain(const Eigen::MatrixXd& block, const RetentionPolicy& policy);

/// Peak signal-to-noise ratio for 8-bit range; identical inputs give
/// kPsnrSentinel.
inline constexpr double kPsnrSentinel = 999.0;
double psnr(const GrayImage& reference, const GrayImage& test);
double mean_squared_error(const GrayImage& reference, const GrayImage& test);

/// Mean SSIM over every 8x8 window (stride 1), K1 = 0.01, K2 = 0.03, L = 255.
double ssim(const GrayImage& a, const GrayImage& b);

/// 100 |baseline - approx| / |baseline|. Throws Error(kDivision) for a zero
/// baseline.
double ape(double approx, double baseline);

struct QualityScores {
  double psnr_db = 0.0;
  double ssim = 0.0;
  double mse = 0.0;
};

struct CompressionResult {
  GrayImage reconstruction;  // clamped to [0, 255], not rounded
  QualityScores scores;
  /// Largest |reconstruction - original| before clamping.
  double max_abs_error_unclamped = 0.0;
};

/// Blockwise forward transform, zig-zag retention and inverse transform.
/// Dimensions that are not multiples of the block size are edge-replicated
/// and cropped afterwards. Blocks are split across `workers` threads; the
/// result is identical for any worker count.
CompressionResult compress_image(const GrayImage& image, const Eigen::MatrixXd& transform,
                                 const RetentionPolicy& policy, int workers = 1);

/// One transform of a sweep.
struct SweepTransform {
  std::string id;
  Eigen::MatrixXd matrix;
};

/// Entries are {"id": ..., "params": "a1,...,a8", "size": 8|16|32},
/// {"id": ..., "dct": N} or {"id": ..., "file": "t.json"} (relative to
/// `base_dir`).
std::vector<SweepTransform> parse_sweep_transforms(const nlohmann::json& list,
                                                   const std::filesystem::path& base_dir);

/// 0.25, 0.27, ..., 0.99.
std::vector<double> default_r_grid();

struct SweepRow {
  std::string transform_id;
  double r = 0.0;
  double psnr = 0.0;           // mean of per-image PSNR (dB)
  double ssim = 0.0;           // mean of per-image SSIM
  double ape_psnr = 0.0;       // vs the exact DCT of the same size
  double ape_ssim = 0.0;
  double psnr_of_mean_mse = 0.0;  // PSNR of the corpus-average MSE
};

struct PerImageRow {
  std::string image;
  std::string transform_id;
  double r = 0.0;
  QualityScores scores;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<PerImageRow> per_image;
};

/// Runs every transform at every r over the corpus. APE baselines use the
/// exact DCT of each transform's size.
SweepResult run_sweep(const std::vector<std::pair<std::string, GrayImage>>& corpus,
                      const std::vector<SweepTransform>& transforms, const std::vector<double>& r_grid,
                      int workers = 1);

/// *.pgm files of a directory in filename order.
std::vector<std::pair<std::string, GrayImage>> load_corpus(const std::filesystem::path& dir);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void write_per_image_csv(std::ostream& out, const std::vector<PerImageRow>& rows);

}  // namespace dctapprox
