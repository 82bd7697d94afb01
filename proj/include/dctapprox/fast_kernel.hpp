#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "dctapprox/dct_core.hpp"
#include "dctapprox/dyadic_matrix.hpp"
#include "dctapprox/error.hpp"
#include "dctapprox/params.hpp"

namespace dctapprox {

/// Sparse factorization T(a) = P * K(a) * A2 * A1 (all over denominator 2).
struct FactorSet {
  DyadicMatrix a1;
  DyadicMatrix a2;
  DyadicMatrix k;
  DyadicMatrix p;

  DyadicMatrix product() const { return p * k * a2 * a1; }
};

FactorSet factor_matrices(const ParamVector& a);

/// Which complexity formula produced a count.
enum class ComplexityRule { kGeneral, kR1, kR2, kR3, kR4, kR5, kR6, kR7, kR8, kR9 };

std::string to_string(ComplexityRule rule);

struct ComplexityCount {
  int additions = 0;
  int shifts = 0;
  ComplexityRule rule = ComplexityRule::kGeneral;

  friend bool operator==(const ComplexityCount&, const ComplexityCount&) = default;
};

/// Minimum-addition count over the general formula and every restriction
/// whose predicate holds; ties go to fewer shifts, then to the earlier rule.
ComplexityCount complexity(const ParamVector& a);

/// Counts from the general formula only (28 - sum w_i [a_i = 0], ...).
ComplexityCount general_complexity(const ParamVector& a);

/// Additions and shifts actually executed while evaluating a stage sequence.
struct OpCount {
  int additions = 0;
  int shifts = 0;

  OpCount& operator+=(const OpCount& o) {
    additions += o.additions;
    shifts += o.shifts;
    return *this;
  }
};

namespace detail {

/// Multiplies by `numerator / 2` using only skip, negate, halve and double.
/// `numerator` is one of {±1, ±2, ±4}.
template <typename V>
V dyadic_multiply(V v, std::int64_t numerator) {
  V r{};
  switch (numerator < 0 ? -numerator : numerator) {
    case 1:
      if constexpr (std::is_integral_v<V>) {
        if (v % 2 != 0) throw Error(ErrorKind::kInvalidParameter, "halving an odd integer is inexact");
        r = v / 2;
      } else {
        r = v * V(0.5);
      }
      break;
    case 2:
      r = v;
      break;
    case 4:
      r = v + v;
      break;
    default:
      throw Error(ErrorKind::kInvalidParameter, "stage entry is not a dyadic multiplier");
  }
  return numerator < 0 ? -r : r;
}

}  // namespace detail

/// Applies one sparse stage `m` (denominator 2) to `in`. Each output costs
/// (nonzero terms - 1) additions; each term with magnitude 1/2 or 2 costs a
/// shift. Sign changes are free.
template <typename V>
std::vector<V> apply_stage(const DyadicMatrix& m, std::span<const V> in, OpCount* ops = nullptr) {
  if (m.denominator() != 2) throw Error(ErrorKind::kInvalidParameter, "stage must use denominator 2");
  if (static_cast<std::size_t>(m.cols()) != in.size()) throw Error(ErrorKind::kShape, "stage input size mismatch");
  std::vector<V> out(static_cast<std::size_t>(m.rows()), V{});
  for (int r = 0; r < m.rows(); ++r) {
    int terms = 0;
    V acc{};
    for (int c = 0; c < m.cols(); ++c) {
      const std::int64_t e = m.num(r, c);
      if (e == 0) continue;
      const V term = detail::dyadic_multiply(in[static_cast<std::size_t>(c)], e);
      acc = terms == 0 ? term : acc + term;
      ++terms;
      if (ops && (e == 1 || e == -1 || e == 4 || e == -4)) ++ops->shifts;
    }
    if (ops && terms > 1) ops->additions += terms - 1;
    out[static_cast<std::size_t>(r)] = acc;
  }
  return out;
}

/// X = T(a) x via the A1, A2, K(a), P stages.
template <typename V>
std::array<V, 8> apply_fast(const FactorSet& f, const std::array<V, 8>& x, OpCount* ops = nullptr) {
  std::vector<V> v(x.begin(), x.end());
  for (const DyadicMatrix* stage : {&f.a1, &f.a2, &f.k, &f.p}) {
    v = apply_stage<V>(*stage, v, ops);
  }
  std::array<V, 8> out{};
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

/// Real-valued T(a) x.
std::array<double, 8> apply_fast(const ParamVector& a, const std::array<double, 8>& x);

/// Exact 2 * T(a) x for integer input (the numerators of T(a) x over 2).
std::array<std::int64_t, 8> apply_fast_exact(const ParamVector& a, const std::array<std::int64_t, 8>& x);

/// Operations executed by the general stage sequence for `a`.
OpCount count_operations(const ParamVector& a);

/// x = C(a)^T X: the transposed stages (P^T, K^T, A2^T, A1^T) applied after
/// the diagonal scaling. Throws Error(kInfeasible) when `a` is not feasible.
std::array<double, 8> apply_inverse(const ParamVector& a, const std::array<double, 8>& coeffs);

}  // namespace dctapprox
