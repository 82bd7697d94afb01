#pragma once

#include <span>
#include <vector>

#include "dctapprox/dct_core.hpp"
#include "dctapprox/dyadic_matrix.hpp"
#include "dctapprox/fast_kernel.hpp"
#include "dctapprox/params.hpp"

namespace dctapprox {

/// blockdiag(T, T) * [[I, J], [I, -J]] with J the counter-identity, in the
/// order the product produces its rows.
DyadicMatrix butterfly_product(const DyadicMatrix& t);

/// Reorders a 2N-row matrix so row k of the upper half lands on row 2k and
/// row k of the lower half on row 2k + 1.
DyadicMatrix interleave_rows(const DyadicMatrix& m);

/// One size-doubling step: interleave_rows(butterfly_product(t)). The upper
/// half of the product only sees even-symmetric input, so interleaving puts
/// its rows on the even frequencies.
DyadicMatrix scale_once(const DyadicMatrix& t);

/// Additions double plus 2N for the input butterfly; shifts double.
ComplexityCount scaled_complexity(const ComplexityCount& c, int n);

struct ScaledTransform {
  int size = 0;
  OrthonormalTransform transform;
  ComplexityCount complexity;
};

/// Scales a feasible 8-point seed to 16 or 32 points.
/// Throws Error(kInfeasible) for an infeasible seed and Error(kInvalidSize)
/// for any other target.
ScaledTransform build_scaled(const ParamVector& a, int target);

/// T_N(a) x through the recursive structure: input butterfly, two N/2-point
/// evaluations, output interleave. `x.size()` selects N (8, 16 or 32).
template <typename V>
std::vector<V> apply_scaled(const FactorSet& f, std::span<const V> x, OpCount* ops = nullptr) {
  const std::size_t n = x.size();
  if (n == 8) {
    std::array<V, 8> in{};
    std::copy(x.begin(), x.end(), in.begin());
    const auto out = apply_fast(f, in, ops);
    return std::vector<V>(out.begin(), out.end());
  }
  if (n != 16 && n != 32) throw Error(ErrorKind::kInvalidSize, "scaled transforms support 8, 16 or 32 points");
  const std::size_t half = n / 2;
  std::vector<V> upper(half), lower(half);
  for (std::size_t i = 0; i < half; ++i) {
    upper[i] = x[i] + x[n - 1 - i];
    lower[i] = x[i] - x[n - 1 - i];
  }
  if (ops) ops->additions += static_cast<int>(n);
  const auto even = apply_scaled<V>(f, upper, ops);
  const auto odd = apply_scaled<V>(f, lower, ops);
  std::vector<V> out(n);
  for (std::size_t k = 0; k < half; ++k) {
    out[2 * k] = even[k];
    out[2 * k + 1] = odd[k];
  }
  return out;
}

}  // namespace dctapprox
