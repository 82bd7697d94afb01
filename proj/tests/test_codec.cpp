#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "dctapprox/codec.hpp"
#include "dctapprox/error.hpp"
#include "dctapprox/image.hpp"
#include "test_support.hpp"

using namespace dctapprox;
using namespace dctapprox::testing;

namespace {

GrayImage random_image(int w, int h, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> px(0, 255);
  GrayImage img(w, h);
  for (auto& p : img.pixels) p = px(rng);
  return img;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("dctapprox_test_" + name);
}

}  // namespace

TEST_CASE("2-D transform round trip and energy") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 255);
  Eigen::MatrixXd block(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) block(i, j) = u(rng);
  for (int j : {1, 9, 15}) {
    const OrthonormalTransform t = orthonormal_approx(known(j));
    const Eigen::MatrixXd coeffs = forward_2d(t, block);
    CHECK(coeffs.norm() == doctest::Approx(block.norm()).epsilon(1e-12));
    CHECK((inverse_2d(t, coeffs) - block).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((forward_2d(t.composed(), block) - coeffs).cwiseAbs().maxCoeff() < 1e-9);
  }
  const Eigen::MatrixXd c = exact_dct_matrix(8);
  const Eigen::MatrixXd flat = Eigen::MatrixXd::Constant(8, 8, 100.0);
  const Eigen::MatrixXd dc = forward_2d(c, flat);
  CHECK(dc(0, 0) == doctest::Approx(800.0));
  CHECK(dc.cwiseAbs().sum() == doctest::Approx(800.0));
}

TEST_CASE("zig-zag order matches the JPEG scan") {
  const int jpeg[64] = {0,  1,  8,  16, 9,  2,  3,  10, 17, 24, 32, 25, 18, 11, 4,  5,  12, 19, 26, 33, 40, 48,
                        41, 34, 27, 20, 13, 6,  7,  14, 21, 28, 35, 42, 49, 56, 57, 50, 43, 36, 29, 22, 15, 23,
                        30, 37, 44, 51, 58, 59, 52, 45, 38, 31, 39, 46, 53, 60, 61, 54, 47, 55, 62, 63};
  const auto order = zigzag_order(8);
  REQUIRE(order.size() == 64);
  for (int k = 0; k < 64; ++k) {
    CAPTURE(k);
    CHECK(order[static_cast<std::size_t>(k)].row * 8 + order[static_cast<std::size_t>(k)].col == jpeg[k]);
  }
  for (int n : {16, 32}) {
    const auto z = zigzag_order(n);
    std::vector<int> seen(static_cast<std::size_t>(n * n), 0);
    for (std::size_t k = 0; k < z.size(); ++k) {
      ++seen[static_cast<std::size_t>(z[k].row * n + z[k].col)];
      if (k > 0) CHECK(z[k].row + z[k].col >= z[k - 1].row + z[k - 1].col);
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
  }
}

TEST_CASE("retention policy") {
  CHECK(RetentionPolicy(0.25).retained_count(8) == 16);
  CHECK(RetentionPolicy(1.0).retained_count(8) == 64);
  CHECK(RetentionPolicy(0.01).retained_count(8) == 1);
  for (double bad : {0.0, -0.1, 1.5}) {
    try {
      RetentionPolicy p(bad);
      FAIL("expected policy error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kPolicy);
    }
  }
  Eigen::MatrixXd block = Eigen::MatrixXd::Ones(8, 8);
  const Eigen::MatrixXd kept = retain(block, RetentionPolicy(0.25));
  CHECK(kept.sum() == 16.0);
  const auto order = zigzag_order(8);
  for (int k = 0; k < 64; ++k) {
    const auto& p = order[static_cast<std::size_t>(k)];
    CHECK(kept(p.row, p.col) == (k < 16 ? 1.0 : 0.0));
  }
}

TEST_CASE("PSNR, SSIM and APE") {
  const GrayImage a = random_image(32, 24, 1);
  CHECK(psnr(a, a) == kPsnrSentinel);
  CHECK(ssim(a, a) == doctest::Approx(1.0));
  GrayImage b = a;
  for (auto& p : b.pixels) p = std::min(255.0, p + 4.0);
  CHECK(ssim(a, b) < 1.0);
  GrayImage c(32, 24, 0.0), d(32, 24, 10.0);
  CHECK(mean_squared_error(c, d) == 100.0);
  CHECK(psnr(c, d) == doctest::Approx(10.0 * std::log10(255.0 * 255.0 / 100.0)));
  CHECK(ssim(a, b) == doctest::Approx(ssim(b, a)));
  CHECK(ape(30.0, 32.0) == doctest::Approx(6.25));
  try {
    ape(1.0, 0.0);
    FAIL("expected division error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kDivision);
  }
  CHECK_THROWS_AS(psnr(GrayImage(4, 4), GrayImage(4, 5)), Error);
}

TEST_CASE("compression quality grows with retention and is exact at r = 1") {
  const GrayImage img = synthetic_ar1_image(64, 64, 0.95, 7);
  for (int j : {1, 15}) {
    const Eigen::MatrixXd t = orthonormal_approx(known(j)).composed();
    double prev = 0.0;
    for (double r : default_r_grid()) {
      const double p = compress_image(img, t, RetentionPolicy(r)).scores.psnr_db;
      CHECK(p >= prev - 1e-9);
      prev = p;
    }
    CHECK(compress_image(img, t, RetentionPolicy(1.0)).scores.psnr_db >= 100.0);
  }
}

TEST_CASE("compression handles ragged sizes and is worker independent") {
  const GrayImage img = random_image(37, 21, 11);
  const Eigen::MatrixXd t = orthonormal_approx(known(9)).composed();
  const CompressionResult one = compress_image(img, t, RetentionPolicy(0.5), 1);
  const CompressionResult four = compress_image(img, t, RetentionPolicy(0.5), 4);
  CHECK(one.reconstruction.width == 37);
  CHECK(one.reconstruction.height == 21);
  CHECK(one.reconstruction.pixels == four.reconstruction.pixels);
  for (double p : one.reconstruction.pixels) CHECK((p >= 0.0 && p <= 255.0));
  const Eigen::MatrixXd t16 = exact_dct_matrix(16);
  CHECK(compress_image(img, t16, RetentionPolicy(1.0)).scores.psnr_db >= 100.0);
}

TEST_CASE("r grid") {
  const auto grid = default_r_grid();
  REQUIRE(grid.size() == 38);
  CHECK(grid.front() == doctest::Approx(0.25));
  CHECK(grid.back() == doctest::Approx(0.99));
}

TEST_CASE("PGM round trip and errors") {
  const GrayImage img = random_image(13, 7, 5);
  const auto path = temp_path("roundtrip.pgm");
  write_pgm(path, img);
  const GrayImage back = read_pgm(path);
  CHECK(back.width == 13);
  CHECK(back.height == 7);
  CHECK(back.pixels == img.pixels);
  std::filesystem::remove(path);

  try {
    read_pgm(temp_path("missing.pgm"));
    FAIL("expected I/O error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kIo);
  }
  const auto bad = temp_path("bad.pgm");
  std::ofstream(bad) << "P2\n2 2\n255\n1 2 3 4\n";
  try {
    read_pgm(bad);
    FAIL("expected parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kParse);
  }
  std::filesystem::remove(bad);
}

TEST_CASE("synthetic image is deterministic and correlated") {
  const GrayImage a = synthetic_ar1_image(64, 64, 0.95, 42);
  const GrayImage b = synthetic_ar1_image(64, 64, 0.95, 42);
  const GrayImage c = synthetic_ar1_image(64, 64, 0.95, 43);
  CHECK(a.pixels == b.pixels);
  CHECK(a.pixels != c.pixels);
  double mean = 0.0;
  for (double p : a.pixels) mean += p;
  mean /= static_cast<double>(a.pixels.size());
  double num = 0.0, den = 0.0;
  for (int r = 0; r < 64; ++r)
    for (int col = 0; col + 1 < 64; ++col) {
      num += (a.at(r, col) - mean) * (a.at(r, col + 1) - mean);
      den += (a.at(r, col) - mean) * (a.at(r, col) - mean);
    }
  CHECK(num / den > 0.8);
}

TEST_CASE("sweep over a tiny corpus") {
  std::vector<std::pair<std::string, GrayImage>> corpus = {{"a", synthetic_ar1_image(32, 32, 0.95, 1)},
                                                           {"b", synthetic_ar1_image(32, 32, 0.9, 2)}};
  const nlohmann::json list = nlohmann::json::parse(
      R"([{"id":"dct8","dct":8},{"id":"ones","params":"1,1,1,1,1,1,1,1","size":8},{"id":"c1_16","params":"0,0,0,1,1,0,0,1","size":16}])");
  const auto transforms = parse_sweep_transforms(list, ".");
  REQUIRE(transforms.size() == 3);
  const std::vector<double> grid = {0.25, 0.5};
  const SweepResult res = run_sweep(corpus, transforms, grid, 2);
  CHECK(res.rows.size() == 6);
  CHECK(res.per_image.size() == 12);
  for (const auto& row : res.rows)
    if (row.transform_id == "dct8") {
      CHECK(row.ape_psnr == 0.0);
      CHECK(row.ape_ssim == 0.0);
    }
  std::ostringstream csv;
  write_sweep_csv(csv, res.rows);
  CHECK(csv.str().rfind("transform_id,r,psnr,ssim,ape_psnr,ape_ssim,psnr_of_mean_mse\n", 0) == 0);
  CHECK_THROWS_AS(parse_sweep_transforms(nlohmann::json::parse(R"([{"id":"x","params":"0,0,0,0,0,0,0,0"}])"), "."),
                  Error);
}
