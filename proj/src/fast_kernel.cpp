#include "dctapprox/fast_kernel.hpp"

#include <cstdlib>

namespace dctapprox {

FactorSet factor_matrices(const ParamVector& a) {
  const std::int64_t a1 = a.doubled(0), a2 = a.doubled(1), a3 = a.doubled(2), a4 = a.doubled(3);
  const std::int64_t a5 = a.doubled(4), a6 = a.doubled(5), a7 = a.doubled(6), a8 = a.doubled(7);
  FactorSet f;
  f.a1 = DyadicMatrix::from_numerators(8, 8, {
      2, 0, 0, 0, 0,  0,  0,  2,
      0, 2, 0, 0, 0,  0,  2,  0,
      0, 0, 2, 0, 0,  2,  0,  0,
      0, 0, 0, 2, 2,  0,  0,  0,
      0, 0, 0, 2, -2, 0,  0,  0,
      0, 0, 2, 0, 0,  -2, 0,  0,
      0, 2, 0, 0, 0,  0,  -2, 0,
      2, 0, 0, 0, 0,  0,  0,  -2,
  });
  f.a2 = DyadicMatrix::from_numerators(8, 8, {
      2, 0, 0,  2,  0, 0, 0, 0,
      0, 2, 2,  0,  0, 0, 0, 0,
      0, 2, -2, 0,  0, 0, 0, 0,
      2, 0, 0,  -2, 0, 0, 0, 0,
      0, 0, 0,  0,  2, 0, 0, 0,
      0, 0, 0,  0,  0, 2, 0, 0,
      0, 0, 0,  0,  0, 0, 2, 0,
      0, 0, 0,  0,  0, 0, 0, 2,
  });
  f.k = DyadicMatrix::from_numerators(8, 8, {
      2, 2,  0,  0,  0,   0,   0,   0,
      2, -2, 0,  0,  0,   0,   0,   0,
      0, 0,  a2, 2,  0,   0,   0,   0,
      0, 0,  -2, a2, 0,   0,   0,   0,
      0, 0,  0,  0,  a1,  a1,  2,   2,
      0, 0,  0,  0,  a6,  -a1, -a5, a5,
      0, 0,  0,  0,  -a1, -a4, a3,  a1,
      0, 0,  0,  0,  -a8, a1,  -a6, a7,
  });
  f.p = DyadicMatrix::from_numerators(8, 8, {
      2, 0, 0, 0, 0, 0, 0, 0,
      0, 0, 0, 0, 2, 0, 0, 0,
      0, 0, 2, 0, 0, 0, 0, 0,
      0, 0, 0, 0, 0, 0, 2, 0,
      0, 2, 0, 0, 0, 0, 0, 0,
      0, 0, 0, 0, 0, 2, 0, 0,
      0, 0, 0, 2, 0, 0, 0, 0,
      0, 0, 0, 0, 0, 0, 0, 2,
  });
  return f;
}

std::string to_string(ComplexityRule rule) {
  if (rule == ComplexityRule::kGeneral) return "general";
  return "R" + std::to_string(static_cast<int>(rule));
}

namespace {

struct RuleSpec {
  ComplexityRule rule;
  int base;
  std::array<int, 8> weights;
  bool (*applies)(const std::array<int, 8>& m);  // m[i] = |2 a_{i+1}|
};

bool all_equal(const std::array<int, 8>& m, std::initializer_list<int> idx) {
  const int first = m[static_cast<std::size_t>(*idx.begin() - 1)];
  for (int i : idx)
    if (m[static_cast<std::size_t>(i - 1)] != first) return false;
  return true;
}

bool all_unit(const std::array<int, 8>& m, std::initializer_list<int> idx) {
  for (int i : idx)
    if (m[static_cast<std::size_t>(i - 1)] != 2) return false;
  return true;
}

// Indices below are 1-based to mirror the usual a1..a8 naming.
const std::array<RuleSpec, 10> kRules = {{
    {ComplexityRule::kGeneral, 28, {6, 2, 1, 1, 2, 2, 1, 1}, [](const auto&) { return true; }},
    {ComplexityRule::kR1, 26, {6, 2, 1, 0, 2, 0, 1, 0}, [](const auto& m) { return all_equal(m, {1, 4, 6, 8}); }},
    {ComplexityRule::kR2, 26, {0, 2, 0, 1, 3, 0, 1, 0},
     [](const auto& m) { return all_unit(m, {1, 3}) && all_equal(m, {5, 6, 8}); }},
    {ComplexityRule::kR3, 26, {0, 2, 1, 1, 3, 0, 1, 0},
     [](const auto& m) { return all_unit(m, {1}) && all_equal(m, {5, 6}) && all_equal(m, {7, 8}); }},
    {ComplexityRule::kR4, 26, {0, 2, 1, 0, 0, 0, 1, 1},
     [](const auto& m) { return all_unit(m, {1, 5, 6}) && all_equal(m, {3, 4}); }},
    {ComplexityRule::kR5, 26, {0, 2, 1, 0, 0, 2, 0, 1}, [](const auto& m) { return all_unit(m, {1, 4, 5, 7}); }},
    {ComplexityRule::kR6, 26, {6, 2, 0, 1, 1, 2, 0, 1},
     [](const auto& m) { return all_equal(m, {1, 3}) && all_equal(m, {6, 7}); }},
    {ComplexityRule::kR7, 24, {6, 2, 0, 0, 1, 0, 0, 0}, [](const auto& m) { return all_equal(m, {1, 3, 4, 6, 7, 8}); }},
    {ComplexityRule::kR8, 24, {0, 2, 0, 0, 0, 0, 0, 0}, [](const auto& m) { return all_unit(m, {1, 3, 4, 5, 6, 7, 8}); }},
    {ComplexityRule::kR9, 24, {0, 2, 1, 0, 0, 0, 1, 0},
     [](const auto& m) { return all_unit(m, {1, 5, 6}) && all_equal(m, {3, 4}) && all_equal(m, {7, 8}); }},
}};

ComplexityCount evaluate_rule(const RuleSpec& spec, const ParamVector& a) {
  ComplexityCount c{spec.base, 0, spec.rule};
  for (int i = 0; i < kParamCount; ++i) {
    const int d = std::abs(a.doubled(i));
    const int w = spec.weights[static_cast<std::size_t>(i)];
    if (d == 0) c.additions -= w;
    if (d == 1 || d == 4) c.shifts += w;
  }
  return c;
}

std::array<int, 8> magnitudes(const ParamVector& a) {
  std::array<int, 8> m{};
  for (int i = 0; i < kParamCount; ++i) m[static_cast<std::size_t>(i)] = std::abs(a.doubled(i));
  return m;
}

}  // namespace

ComplexityCount general_complexity(const ParamVector& a) { return evaluate_rule(kRules[0], a); }

ComplexityCount complexity(const ParamVector& a) {
  const auto m = magnitudes(a);
  ComplexityCount best = evaluate_rule(kRules[0], a);
  for (std::size_t r = 1; r < kRules.size(); ++r) {
    if (!kRules[r].applies(m)) continue;
    const ComplexityCount c = evaluate_rule(kRules[r], a);
    if (c.additions < best.additions || (c.additions == best.additions && c.shifts < best.shifts)) best = c;
  }
  return best;
}

std::array<double, 8> apply_fast(const ParamVector& a, const std::array<double, 8>& x) {
  return apply_fast(factor_matrices(a), x);
}

std::array<std::int64_t, 8> apply_fast_exact(const ParamVector& a, const std::array<std::int64_t, 8>& x) {
  std::array<std::int64_t, 8> twice{};
  for (std::size_t i = 0; i < 8; ++i) twice[i] = 2 * x[i];
  return apply_fast(factor_matrices(a), twice);
}

OpCount count_operations(const ParamVector& a) {
  OpCount ops;
  apply_fast(factor_matrices(a), std::array<double, 8>{}, &ops);
  return ops;
}

std::array<double, 8> apply_inverse(const ParamVector& a, const std::array<double, 8>& coeffs) {
  const std::vector<double> scale = scaling_diag(a);
  const FactorSet f = factor_matrices(a);
  std::vector<double> v(8);
  for (std::size_t k = 0; k < 8; ++k) v[k] = coeffs[k] * scale[k];
  for (const DyadicMatrix* stage : {&f.p, &f.k, &f.a2, &f.a1}) {
    v = apply_stage<double>(stage->transpose(), v);
  }
  std::array<double, 8> out{};
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

}  // namespace dctapprox
