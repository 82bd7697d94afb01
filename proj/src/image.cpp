#include "dctapprox/image.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <string>

#include "dctapprox/error.hpp"

namespace dctapprox {

namespace {

// Next header token, skipping whitespace and '#' comments.
std::string next_token(std::istream& in) {
  std::string tok;
  int ch;
  while ((ch = in.get()) != EOF) {
    if (ch == '#') {
      while ((ch = in.get()) != EOF && ch != '\n') {
      }
      continue;
    }
    if (std::isspace(ch)) {
      if (!tok.empty()) break;
      continue;
    }
    tok.push_back(static_cast<char>(ch));
  }
  return tok;
}

int header_int(std::istream& in, const std::filesystem::path& path) {
  const std::string tok = next_token(in);
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::kParse, path.string() + ": bad PGM header field '" + tok + "'");
  }
}

}  // namespace

GrayImage read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot read " + path.string());
  if (next_token(in) != "P5") throw Error(ErrorKind::kParse, path.string() + ": not a binary PGM (P5)");
  const int w = header_int(in, path);
  const int h = header_int(in, path);
  const int maxval = header_int(in, path);
  if (w <= 0 || h <= 0 || maxval <= 0 || maxval > 255) {
    throw Error(ErrorKind::kParse, path.string() + ": unsupported PGM dimensions or maxval");
  }
  std::vector<unsigned char> raw(static_cast<std::size_t>(w) * static_cast<std::size_t>(h));
  in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (in.gcount() != static_cast<std::streamsize>(raw.size())) {
    throw Error(ErrorKind::kParse, path.string() + ": truncated pixel data");
  }
  GrayImage img(w, h);
  const double to_255 = 255.0 / maxval;
  for (std::size_t i = 0; i < raw.size(); ++i) img.pixels[i] = maxval == 255 ? raw[i] : raw[i] * to_255;
  return img;
}

void write_pgm(const std::filesystem::path& path, const GrayImage& image) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path.string());
  out << "P5\n" << image.width << ' ' << image.height << "\n255\n";
  std::vector<unsigned char> raw(image.pixels.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    raw[i] = static_cast<unsigned char>(std::clamp(std::lround(image.pixels[i]), 0L, 255L));
  }
  out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (!out) throw Error(ErrorKind::kIo, "failed writing " + path.string());
}

GrayImage synthetic_ar1_image(int width, int height, double rho, std::uint64_t seed) {
  if (width <= 0 || height <= 0) throw Error(ErrorKind::kInvalidSize, "image dimensions must be positive");
  if (!(rho > 0.0 && rho < 1.0)) throw Error(ErrorKind::kInvalidModel, "rho must lie in (0, 1)");
  // mt19937_64 output is fixed by the standard; the distributions are not, so
  // uniforms and the Box-Muller transform are done here.
  std::mt19937_64 gen(seed);
  auto uniform = [&] { return (static_cast<double>(gen() >> 11) + 0.5) * 0x1.0p-53; };
  auto gaussian = [&] {
    return std::sqrt(-2.0 * std::log(uniform())) * std::cos(2.0 * std::numbers::pi * uniform());
  };

  GrayImage field(width, height);
  const double innovation = 1.0 - rho * rho;
  for (int i = 0; i < height; ++i) {
    for (int j = 0; j < width; ++j) {
      double v = innovation * gaussian();
      if (j > 0) v += rho * field.at(i, j - 1);
      if (i > 0) v += rho * field.at(i - 1, j);
      if (i > 0 && j > 0) v -= rho * rho * field.at(i - 1, j - 1);
      field.at(i, j) = v;
    }
  }
  double mean = 0.0;
  for (double v : field.pixels) mean += v;
  mean /= static_cast<double>(field.pixels.size());
  double var = 0.0;
  for (double v : field.pixels) var += (v - mean) * (v - mean);
  const double sd = std::sqrt(var / static_cast<double>(field.pixels.size()));
  for (double& v : field.pixels) v = std::clamp(std::round(128.0 + 32.0 * (v - mean) / sd), 0.0, 255.0);
  return field;
}

}  // namespace dctapprox
