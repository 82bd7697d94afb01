#include "dctapprox/jam.hpp"

#include <string>

#include "dctapprox/error.hpp"

namespace dctapprox {

DyadicMatrix butterfly_product(const DyadicMatrix& t) {
  if (!t.square()) throw Error(ErrorKind::kShape, "size doubling needs a square matrix");
  const int n = t.rows();
  DyadicMatrix out(2 * n, 2 * n, t.denominator());
  // Column j < n of the butterfly picks x_j; column n + j picks x_{2n-1-j}
  // with sign + in the upper block and - in the lower block.
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const std::int64_t v = t.num(r, c);
      out.num(r, c) = v;
      out.num(r, 2 * n - 1 - c) = v;
      out.num(n + r, c) = v;
      out.num(n + r, 2 * n - 1 - c) = -v;
    }
  }
  return out;
}

DyadicMatrix interleave_rows(const DyadicMatrix& m) {
  if (m.rows() % 2 != 0) throw Error(ErrorKind::kShape, "interleave needs an even row count");
  const int half = m.rows() / 2;
  DyadicMatrix out(m.rows(), m.cols(), m.denominator());
  for (int k = 0; k < half; ++k) {
    for (int c = 0; c < m.cols(); ++c) {
      out.num(2 * k, c) = m.num(k, c);
      out.num(2 * k + 1, c) = m.num(half + k, c);
    }
  }
  return out;
}

DyadicMatrix scale_once(const DyadicMatrix& t) { return interleave_rows(butterfly_product(t)); }

ComplexityCount scaled_complexity(const ComplexityCount& c, int n) {
  return {2 * c.additions + 2 * n, 2 * c.shifts, c.rule};
}

ScaledTransform build_scaled(const ParamVector& a, int target) {
  if (target != 16 && target != 32) {
    throw Error(ErrorKind::kInvalidSize, "scaled size must be 16 or 32, got " + std::to_string(target));
  }
  if (!is_feasible(a)) {
    throw Error(ErrorKind::kInfeasible, "seed " + a.to_string() + " does not give an orthogonal matrix");
  }
  DyadicMatrix t = build_t(a);
  ComplexityCount c = complexity(a);
  for (int n = 8; n < target; n *= 2) {
    t = scale_once(t);
    c = scaled_complexity(c, n);
  }
  return {target, OrthonormalTransform::from_integer_part(std::move(t)), c};
}

}  // namespace dctapprox
