#include "dctapprox/params.hpp"

#include <charconv>
#include <cmath>
#include <vector>

#include "dctapprox/error.hpp"

namespace dctapprox {

ParamVector ParamVector::from_doubled(const std::array<int, kParamCount>& doubled) {
  for (int i = 0; i < kParamCount; ++i) {
    if (!is_admissible_doubled(doubled[i])) {
      throw Error(ErrorKind::kInvalidParameter,
                  "parameter a" + std::to_string(i + 1) + " = " + std::to_string(doubled[i]) +
                      "/2 is not in {0, +-1/2, +-1, +-2}");
    }
  }
  ParamVector p;
  p.doubled_ = doubled;
  return p;
}

ParamVector ParamVector::from_values(const std::array<double, kParamCount>& values) {
  std::array<int, kParamCount> doubled{};
  for (int i = 0; i < kParamCount; ++i) {
    const double twice = 2.0 * values[i];
    const double rounded = std::round(twice);
    if (rounded != twice || !is_admissible_doubled(static_cast<int>(rounded))) {
      throw Error(ErrorKind::kInvalidParameter,
                  "parameter a" + std::to_string(i + 1) + " is not in {0, +-1/2, +-1, +-2}");
    }
    doubled[i] = static_cast<int>(rounded);
  }
  return from_doubled(doubled);
}

std::string format_param_value(int doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return (doubled < 0 ? "-" : "") + std::to_string(std::abs(doubled) / 2) + ".5";
}

std::string ParamVector::to_string() const {
  std::string out;
  for (int i = 0; i < kParamCount; ++i) {
    if (i) out += ',';
    out += format_param_value(doubled_[i]);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Parses one token into 2*value; returns false when the token is not an
// admissible value.
bool parse_token(std::string_view token, int& doubled) {
  if (token.empty()) return false;
  const auto slash = token.find('/');
  if (slash != std::string_view::npos) {
    long num = 0, den = 0;
    const auto n = token.substr(0, slash);
    const auto d = token.substr(slash + 1);
    if (std::from_chars(n.data(), n.data() + n.size(), num).ptr != n.data() + n.size()) return false;
    if (std::from_chars(d.data(), d.data() + d.size(), den).ptr != d.data() + d.size()) return false;
    if (den <= 0 || (2 * num) % den != 0) return false;
    doubled = static_cast<int>(2 * num / den);
    return is_admissible_doubled(doubled);
  }
  double value = 0.0;
  const std::string buf(token);
  std::size_t used = 0;
  try {
    value = std::stod(buf, &used);
  } catch (const std::exception&) {
    return false;
  }
  if (used != buf.size()) return false;
  const double twice = 2.0 * value;
  if (std::round(twice) != twice) return false;
  doubled = static_cast<int>(twice);
  return is_admissible_doubled(doubled);
}

}  // namespace

ParamVector parse_params(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    tokens.push_back(trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (tokens.size() != kParamCount) {
    throw Error(ErrorKind::kParse, "expected 8 comma-separated parameters, got " +
                                       std::to_string(tokens.size()));
  }
  std::array<int, kParamCount> doubled{};
  for (int i = 0; i < kParamCount; ++i) {
    if (!parse_token(tokens[i], doubled[i])) {
      throw Error(ErrorKind::kParse, "invalid parameter token '" + std::string(tokens[i]) +
                                         "' (allowed: 0, +-0.5, +-1, +-2, or 1/2)");
    }
  }
  return ParamVector::from_doubled(doubled);
}

const std::array<ParamVector, 15>& known_optimal() {
  static const std::array<ParamVector, 15> table = {
      ParamVector::from_doubled({0, 0, 0, 2, 2, 0, 0, 2}),
      ParamVector::from_doubled({0, 2, 0, 2, 2, 0, 0, 2}),
      ParamVector::from_doubled({0, 0, 0, 2, 1, 2, 2, 2}),
      ParamVector::from_doubled({0, 0, 0, 2, 2, 2, 2, 4}),
      ParamVector::from_doubled({0, 1, 0, 2, 2, 0, 0, 2}),
      ParamVector::from_doubled({2, 0, 0, 0, 2, 2, 0, 0}),
      ParamVector::from_doubled({0, 2, 0, 2, 2, 2, 2, 4}),
      ParamVector::from_doubled({0, 2, 0, 2, 1, 2, 2, 2}),
      ParamVector::from_doubled({0, 1, 0, 2, 2, 2, 2, 4}),
      ParamVector::from_doubled({0, 1, 0, 2, 1, 2, 2, 2}),
      ParamVector::from_doubled({2, 0, 2, 2, 2, 2, 2, 2}),
      ParamVector::from_doubled({2, 1, 0, 0, 2, 2, 0, 0}),
      ParamVector::from_doubled({2, 0, 1, 1, 2, 2, 1, 1}),
      ParamVector::from_doubled({2, 1, 2, 2, 2, 2, 2, 2}),
      ParamVector::from_doubled({2, 1, 1, 1, 2, 2, 1, 1}),
  };
  return table;
}

}  // namespace dctapprox
