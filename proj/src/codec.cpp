#include "dctapprox/codec.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <thread>

#include "dctapprox/csv.hpp"
#include "dctapprox/error.hpp"
#include "dctapprox/jam.hpp"
#include "dctapprox/transform_io.hpp"

namespace dctapprox {

namespace {

void require_block(const Eigen::MatrixXd& transform, const Eigen::MatrixXd& block) {
  if (transform.rows() != transform.cols() || block.rows() != transform.rows() || block.cols() != transform.rows()) {
    throw Error(ErrorKind::kShape, "block and transform sizes differ");
  }
}

void require_same_size(const GrayImage& a, const GrayImage& b) {
  if (a.width != b.width || a.height != b.height) throw Error(ErrorKind::kShape, "image sizes differ");
}

}  // namespace

Eigen::MatrixXd forward_2d(const Eigen::MatrixXd& transform, const Eigen::MatrixXd& block) {
  require_block(transform, block);
  return transform * block * transform.transpose();
}

Eigen::MatrixXd forward_2d(const OrthonormalTransform& transform, const Eigen::MatrixXd& block) {
  return forward_2d(transform.composed(), block);
}

Eigen::MatrixXd inverse_2d(const Eigen::MatrixXd& transform, const Eigen::MatrixXd& block) {
  require_block(transform, block);
  return transform.transpose() * block * transform;
}

Eigen::MatrixXd inverse_2d(const OrthonormalTransform& transform, const Eigen::MatrixXd& block) {
  return inverse_2d(transform.composed(), block);
}

std::vector<BlockPosition> zigzag_order(int n) {
  if (n < 2) throw Error(ErrorKind::kInvalidSize, "zig-zag size must be at least 2");
  std::vector<BlockPosition> order;
  order.reserve(static_cast<std::size_t>(n * n));
  for (int s = 0; s <= 2 * (n - 1); ++s) {
    // Odd anti-diagonals run top-right to bottom-left, even ones the reverse.
    const int lo = std::max(0, s - (n - 1));
    const int hi = std::min(s, n - 1);
    if (s % 2 == 1) {
      for (int r = lo; r <= hi; ++r) order.push_back({r, s - r});
    } else {
      for (int r = hi; r >= lo; --r) order.push_back({r, s - r});
    }
  }
  return order;
}

RetentionPolicy::RetentionPolicy(double r) : r_(r) {
  if (!(r > 0.0 && r <= 1.0)) throw Error(ErrorKind::kPolicy, "retention fraction must lie in (0, 1]");
}

int RetentionPolicy::retained_count(int n) const {
  return static_cast<int>(std::lround(r_ * n * n));
}

Eigen::MatrixXd retain(const Eigen::MatrixXd& block, const RetentionPolicy& policy) {
  if (block.rows() != block.cols()) throw Error(ErrorKind::kShape, "block must be square");
  const int n = static_cast<int>(block.rows());
  const auto order = zigzag_order(n);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  const int keep = std::min(policy.retained_count(n), n * n);
  for (int i = 0; i < keep; ++i) {
    const auto& p = order[static_cast<std::size_t>(i)];
    out(p.row, p.col) = block(p.row, p.col);
  }
  return out;
}

double mean_squared_error(const GrayImage& reference, const GrayImage& test) {
  require_same_size(reference, test);
  double sum = 0.0;
  for (std::size_t i = 0; i < reference.pixels.size(); ++i) {
    const double d = reference.pixels[i] - test.pixels[i];
    sum += d * d;
  }
  return sum / static_cast<double>(reference.pixels.size());
}

namespace {

double psnr_from_mse(double mse) {
  if (mse <= 0.0) return kPsnrSentinel;
  return std::min(kPsnrSentinel, 10.0 * std::log10(255.0 * 255.0 / mse));
}

}  // namespace

double psnr(const GrayImage& reference, const GrayImage& test) {
  return psnr_from_mse(mean_squared_error(reference, test));
}

double ssim(const GrayImage& a, const GrayImage& b) {
  require_same_size(a, b);
  constexpr int kWin = 8;
  const int w = a.width, h = a.height;
  if (w < kWin || h < kWin) throw Error(ErrorKind::kShape, "SSIM needs images of at least 8x8");
  constexpr double c1 = (0.01 * 255) * (0.01 * 255);
  constexpr double c2 = (0.03 * 255) * (0.03 * 255);

  // Summed-area tables of x, y, x^2, y^2, xy with a zero border.
  const std::size_t stride = static_cast<std::size_t>(w) + 1;
  std::vector<double> sx(stride * (h + 1)), sy(sx.size()), sxx(sx.size()), syy(sx.size()), sxy(sx.size());
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < w; ++j) {
      const double x = a.at(i, j), y = b.at(i, j);
      const std::size_t k = (i + 1) * stride + (j + 1);
      const std::size_t up = i * stride + (j + 1), left = (i + 1) * stride + j, diag = i * stride + j;
      sx[k] = x + sx[up] + sx[left] - sx[diag];
      sy[k] = y + sy[up] + sy[left] - sy[diag];
      sxx[k] = x * x + sxx[up] + sxx[left] - sxx[diag];
      syy[k] = y * y + syy[up] + syy[left] - syy[diag];
      sxy[k] = x * y + sxy[up] + sxy[left] - sxy[diag];
    }
  }
  auto window = [&](const std::vector<double>& t, int i, int j) {
    const std::size_t r0 = i * stride, r1 = (i + kWin) * stride;
    return t[r1 + j + kWin] - t[r0 + j + kWin] - t[r1 + j] + t[r0 + j];
  };
  constexpr double inv = 1.0 / (kWin * kWin);
  double total = 0.0;
  for (int i = 0; i + kWin <= h; ++i) {
    for (int j = 0; j + kWin <= w; ++j) {
      const double mx = window(sx, i, j) * inv, my = window(sy, i, j) * inv;
      const double vx = window(sxx, i, j) * inv - mx * mx;
      const double vy = window(syy, i, j) * inv - my * my;
      const double cov = window(sxy, i, j) * inv - mx * my;
      total += ((2 * mx * my + c1) * (2 * cov + c2)) / ((mx * mx + my * my + c1) * (vx + vy + c2));
    }
  }
  return total / (static_cast<double>(h - kWin + 1) * (w - kWin + 1));
}

double ape(double approx, double baseline) {
  if (baseline == 0.0) throw Error(ErrorKind::kDivision, "APE baseline is zero");
  return 100.0 * std::abs(baseline - approx) / std::abs(baseline);
}

CompressionResult compress_image(const GrayImage& image, const Eigen::MatrixXd& transform,
                                 const RetentionPolicy& policy, int workers) {
  const int n = static_cast<int>(transform.rows());
  if (transform.cols() != n || (n != 8 && n != 16 && n != 32)) {
    throw Error(ErrorKind::kShape, "block transform must be 8x8, 16x16 or 32x32");
  }
  if (image.width <= 0 || image.height <= 0) throw Error(ErrorKind::kShape, "empty image");
  const int pw = (image.width + n - 1) / n * n;
  const int ph = (image.height + n - 1) / n * n;

  GrayImage padded(pw, ph);
  for (int i = 0; i < ph; ++i)
    for (int j = 0; j < pw; ++j) padded.at(i, j) = image.at(std::min(i, image.height - 1), std::min(j, image.width - 1));

  // Retention mask in row-major block coordinates.
  Eigen::MatrixXd mask = retain(Eigen::MatrixXd::Ones(n, n), policy);
  const Eigen::MatrixXd ct = transform.transpose();

  GrayImage recon(pw, ph);
  const int block_rows = ph / n, block_cols = pw / n;
  auto work = [&](int first, int last) {
    Eigen::MatrixXd block(n, n);
    for (int br = first; br < last; ++br) {
      for (int bc = 0; bc < block_cols; ++bc) {
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) block(i, j) = padded.at(br * n + i, bc * n + j);
        const Eigen::MatrixXd coeffs = (transform * block * ct).cwiseProduct(mask);
        const Eigen::MatrixXd back = ct * coeffs * transform;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) recon.at(br * n + i, bc * n + j) = back(i, j);
      }
    }
  };
  const int threads = std::clamp(workers, 1, block_rows);
  if (threads == 1) {
    work(0, block_rows);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, block_rows * t / threads, block_rows * (t + 1) / threads);
    for (auto& th : pool) th.join();
  }

  CompressionResult result;
  result.reconstruction = GrayImage(image.width, image.height);
  for (int i = 0; i < image.height; ++i) {
    for (int j = 0; j < image.width; ++j) {
      const double v = recon.at(i, j);
      result.max_abs_error_unclamped = std::max(result.max_abs_error_unclamped, std::abs(v - image.at(i, j)));
      result.reconstruction.at(i, j) = std::clamp(v, 0.0, 255.0);
    }
  }
  result.scores.mse = mean_squared_error(image, result.reconstruction);
  result.scores.psnr_db = psnr_from_mse(result.scores.mse);
  result.scores.ssim = ssim(image, result.reconstruction);
  return result;
}

std::vector<SweepTransform> parse_sweep_transforms(const nlohmann::json& list,
                                                   const std::filesystem::path& base_dir) {
  if (!list.is_array()) throw Error(ErrorKind::kParse, "transform list must be a JSON array");
  std::vector<SweepTransform> out;
  try {
    for (const auto& item : list) {
      SweepTransform t;
      t.id = item.at("id").get<std::string>();
      if (item.contains("params")) {
        const ParamVector a = parse_params(item.at("params").get<std::string>());
        const int size = item.value("size", 8);
        t.matrix = size == 8 ? orthonormal_approx(a).composed() : build_scaled(a, size).transform.composed();
      } else if (item.contains("dct")) {
        t.matrix = exact_dct_matrix(item.at("dct").get<int>());
      } else if (item.contains("file")) {
        std::filesystem::path p = item.at("file").get<std::string>();
        if (p.is_relative()) p = base_dir / p;
        t.matrix = load_transform(p).composed();
      } else {
        throw Error(ErrorKind::kParse, "transform '" + t.id + "' needs one of params, dct or file");
      }
      out.push_back(std::move(t));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("transform list: ") + e.what());
  }
  return out;
}

std::vector<double> default_r_grid() {
  std::vector<double> grid;
  for (int pct = 25; pct <= 99; pct += 2) grid.push_back(pct / 100.0);
  return grid;
}

SweepResult run_sweep(const std::vector<std::pair<std::string, GrayImage>>& corpus,
                      const std::vector<SweepTransform>& transforms, const std::vector<double>& r_grid,
                      int workers) {
  if (corpus.empty()) throw Error(ErrorKind::kIo, "corpus contains no images");
  SweepResult result;

  auto run_one = [&](const Eigen::MatrixXd& m, double r, std::vector<QualityScores>& scores) {
    const RetentionPolicy policy(r);
    scores.clear();
    for (const auto& [name, img] : corpus) scores.push_back(compress_image(img, m, policy, workers).scores);
  };
  auto mean = [](const std::vector<QualityScores>& s, auto field) {
    double sum = 0.0;
    for (const auto& q : s) sum += q.*field;
    return sum / static_cast<double>(s.size());
  };

  std::map<std::pair<int, double>, std::pair<double, double>> baseline;  // (size, r) -> (psnr, ssim)
  std::vector<QualityScores> scores;
  for (const auto& t : transforms) {
    const int n = static_cast<int>(t.matrix.rows());
    for (double r : r_grid) {
      if (!baseline.count({n, r})) {
        run_one(exact_dct_matrix(n), r, scores);
        baseline[{n, r}] = {mean(scores, &QualityScores::psnr_db), mean(scores, &QualityScores::ssim)};
      }
      run_one(t.matrix, r, scores);
      SweepRow row;
      row.transform_id = t.id;
      row.r = r;
      row.psnr = mean(scores, &QualityScores::psnr_db);
      row.ssim = mean(scores, &QualityScores::ssim);
      const auto [base_psnr, base_ssim] = baseline.at({n, r});
      row.ape_psnr = ape(row.psnr, base_psnr);
      row.ape_ssim = ape(row.ssim, base_ssim);
      const double avg_mse = mean(scores, &QualityScores::mse);
      row.psnr_of_mean_mse = avg_mse <= 0.0 ? kPsnrSentinel : 10.0 * std::log10(255.0 * 255.0 / avg_mse);
      result.rows.push_back(row);
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        result.per_image.push_back({corpus[i].first, t.id, r, scores[i]});
      }
    }
  }
  return result;
}

std::vector<std::pair<std::string, GrayImage>> load_corpus(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) throw Error(ErrorKind::kIo, "not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".pgm") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<std::pair<std::string, GrayImage>> corpus;
  for (const auto& f : files) corpus.emplace_back(f.filename().string(), read_pgm(f));
  return corpus;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "transform_id,r,psnr,ssim,ape_psnr,ape_ssim,psnr_of_mean_mse\n";
  for (const auto& r : rows) {
    out << r.transform_id << ',' << format_2dp(r.r) << ',' << format_sig6(r.psnr) << ',' << format_sig6(r.ssim)
        << ',' << format_sig6(r.ape_psnr) << ',' << format_sig6(r.ape_ssim) << ','
        << format_sig6(r.psnr_of_mean_mse) << '\n';
  }
}

void write_per_image_csv(std::ostream& out, const std::vector<PerImageRow>& rows) {
  out << "image,transform_id,r,psnr,ssim,mse\n";
  for (const auto& r : rows) {
    out << r.image << ',' << r.transform_id << ',' << format_2dp(r.r) << ',' << format_sig6(r.scores.psnr_db) << ','
        << format_sig6(r.scores.ssim) << ',' << format_sig6(r.scores.mse) << '\n';
  }
}

}  // namespace dctapprox
