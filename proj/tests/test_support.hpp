#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "dctapprox/params.hpp"

namespace dctapprox::testing {

inline ParamVector random_params(std::mt19937_64& rng) {
  std::array<int, kParamCount> d{};
  for (auto& v : d) v = kDoubledValues[rng() % kDoubledValues.size()];
  return ParamVector::from_doubled(d);
}

inline ParamVector known(int j) { return known_optimal()[static_cast<std::size_t>(j - 1)]; }

}  // namespace dctapprox::testing
