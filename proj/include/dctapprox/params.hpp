#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace dctapprox {

/// Number of free parameters in the 8-point family.
inline constexpr int kParamCount = 8;

/// The seven admissible parameter values, stored doubled, in ascending order.
inline constexpr std::array<int, 7> kDoubledValues = {-4, -2, -1, 0, 1, 2, 4};

/// True when `doubled / 2` is one of {0, ±1/2, ±1, ±2}.
constexpr bool is_admissible_doubled(int doubled) {
  for (int v : kDoubledValues) {
    if (v == doubled) return true;
  }
  return false;
}

/// Parameter vector a1..a8 of the 8-point family. Each component is held as
/// the integer 2*a_i so every admissible value is exact.
class ParamVector {
 public:
  ParamVector() = default;

  /// Throws Error(kInvalidParameter) if any component is not admissible.
  static ParamVector from_doubled(const std::array<int, kParamCount>& doubled);
  static ParamVector from_values(const std::array<double, kParamCount>& values);

  /// 2*a_i for the 1-based index i used in the literature is doubled(i - 1).
  int doubled(int index) const { return doubled_[static_cast<std::size_t>(index)]; }
  double value(int index) const { return 0.5 * doubled(index); }
  const std::array<int, kParamCount>& doubled_values() const { return doubled_; }

  /// Comma-separated values, e.g. "0,0.5,0,1,1,1,1,2".
  std::string to_string() const;

  friend bool operator==(const ParamVector&, const ParamVector&) = default;
  friend auto operator<=>(const ParamVector&, const ParamVector&) = default;

 private:
  std::array<int, kParamCount> doubled_{};
};

/// Formats a single parameter value ("-2", "-0.5", "0", ...).
std::string format_param_value(int doubled);

/// Parses "a1,...,a8". Tokens may be decimal ("0.5", "-2") or "1/2"-style
/// fractions. Throws Error(kParse) naming the offending token.
ParamVector parse_params(std::string_view text);

/// The fifteen known optimal 8-point approximations, indexed 1..15 as
/// `known_optimal()[j - 1]`.
const std::array<ParamVector, 15>& known_optimal();

}  // namespace dctapprox
