#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace dctapprox {

/// Grayscale image with real-valued samples on the 0..255 scale.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<double> pixels;  // row-major

  GrayImage() = default;
  GrayImage(int w, int h, double fill = 0.0)
      : width(w), height(h), pixels(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

  double& at(int row, int col) { return pixels[static_cast<std::size_t>(row) * width + col]; }
  double at(int row, int col) const { return pixels[static_cast<std::size_t>(row) * width + col]; }
};

/// Reads binary PGM (P5) with maxval <= 255. Throws Error(kIo) when the file
/// is missing and Error(kParse) when it is malformed.
GrayImage read_pgm(const std::filesystem::path& path);

/// Writes binary PGM (P5, maxval 255), rounding and clamping samples.
void write_pgm(const std::filesystem::path& path, const GrayImage& image);

/// Separable 2-D first-order Markov field (correlation rho along rows and
/// columns), scaled to mean 128 and standard deviation 32, clamped and
/// rounded to 8-bit levels. Deterministic for a given seed.
GrayImage synthetic_ar1_image(int width, int height, double rho, std::uint64_t seed);

}  // namespace dctapprox
