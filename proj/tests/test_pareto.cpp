#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "dctapprox/dct_core.hpp"
#include "dctapprox/pareto.hpp"
#include "test_support.hpp"

using namespace dctapprox;
using namespace dctapprox::testing;

namespace {

// Quadratic all-pairs reference.
std::set<ParamVector> brute_force_front(const std::vector<Candidate>& cands) {
  std::set<ParamVector> out;
  for (const auto& c : cands) {
    const Objectives oc = objectives(c.report);
    bool dominated = false;
    for (const auto& d : cands)
      if (dominates(objectives(d.report), oc)) {
        dominated = true;
        break;
      }
    if (!dominated) out.insert(c.a);
  }
  return out;
}

const std::vector<ParamVector>& all_feasible() {
  static const std::vector<ParamVector> cache = feasible_candidates();
  return cache;
}

std::vector<Candidate> evaluate_all(const std::vector<ParamVector>& as) {
  const SignalModel model(0.95, 8);
  std::vector<Candidate> out;
  for (const auto& a : as) out.push_back({a, evaluate(a, model)});
  return out;
}

}  // namespace

TEST_CASE("enumeration order") {
  CHECK(candidate_at(0).to_string() == "-2,-2,-2,-2,-2,-2,-2,-2");
  CHECK(candidate_at(kCandidateCount - 1).to_string() == "2,2,2,2,2,2,2,2");
  CHECK(candidate_at(1).to_string() == "-2,-2,-2,-2,-2,-2,-2,-1");
  CHECK(candidate_at(7).to_string() == "-2,-2,-2,-2,-2,-2,-1,-2");
  for (std::uint32_t i = 1; i < 2000; ++i) CHECK(candidate_at(i - 1) < candidate_at(i));

  std::uint32_t count = 0, binary = 0;
  bool ordered = true;
  ParamVector prev = candidate_at(0);
  enumerate_candidates([&](const ParamVector& a) {
    if (count > 0 && !(prev < a)) ordered = false;
    prev = a;
    ++count;
    bool zero_one = true;
    for (int i = 0; i < kParamCount; ++i) zero_one &= a.doubled(i) == 0 || a.doubled(i) == 2;
    binary += zero_one;
  });
  CHECK(count == kCandidateCount);
  CHECK(binary == 256);
  CHECK(ordered);
}

TEST_CASE("feasible set") {
  const auto& feasible = all_feasible();
  CHECK(feasible.size() == 2821);
  CHECK(std::is_sorted(feasible.begin(), feasible.end()));
  for (const auto& a : known_optimal()) CHECK(std::binary_search(feasible.begin(), feasible.end(), a));
}

TEST_CASE("dominance") {
  const Objectives a{1, 1, 1, 1, 16, 0};
  Objectives b = a;
  CHECK_FALSE(dominates(a, b));
  b[5] = 1;
  CHECK(dominates(a, b));
  CHECK_FALSE(dominates(b, a));
  b[0] = 0;
  CHECK_FALSE(dominates(a, b));
  CHECK_FALSE(dominates(b, a));
}

TEST_CASE("front agrees with the all-pairs reference on subsamples") {
  std::mt19937_64 rng(2024);
  std::vector<ParamVector> pool = all_feasible();
  for (int round = 0; round < 3; ++round) {
    std::shuffle(pool.begin(), pool.end(), rng);
    const std::vector<ParamVector> sample(pool.begin(), pool.begin() + 1000);
    const auto cands = evaluate_all(sample);
    const auto front = pareto_front(cands);
    std::set<ParamVector> got;
    for (const auto& e : front) got.insert(e.a);
    CHECK(got == brute_force_front(cands));
  }
}

TEST_CASE("front ignores input order and marks one canonical member per tie") {
  std::vector<ParamVector> sample(all_feasible().begin(), all_feasible().begin() + 600);
  auto cands = evaluate_all(sample);
  const auto reference = pareto_front(cands);
  std::mt19937_64 rng(9);
  std::shuffle(cands.begin(), cands.end(), rng);
  const auto shuffled = pareto_front(cands);
  REQUIRE(reference.size() == shuffled.size());
  for (std::size_t i = 0; i < reference.size(); ++i) {
    CHECK(reference[i].a == shuffled[i].a);
    CHECK(reference[i].canonical == shuffled[i].canonical);
  }
  std::map<Objectives, int> canon_per_group;
  for (const auto& e : reference) canon_per_group[objectives(e.report)] += e.canonical;
  for (const auto& [o, n] : canon_per_group) CHECK(n == 1);
}

TEST_CASE("tie groups keep the most nonnegative representative") {
  const SignalModel model(0.95, 8);
  const MetricsReport r = evaluate(known(15), model);
  const ParamVector pos = ParamVector::from_values({1, 0.5, 0.5, 0.5, 1, 1, 0.5, 0.5});
  const ParamVector one_neg = ParamVector::from_values({1, 0.5, 0.5, 0.5, -1, 1, 0.5, 0.5});
  const ParamVector two_neg = ParamVector::from_values({-1, 0.5, 0.5, 0.5, -1, 1, 0.5, 0.5});
  const ParamVector lex_later = ParamVector::from_values({1, 1, 0.5, 0.5, 1, 1, 0.5, 0.5});
  const auto front = pareto_front({{two_neg, r}, {lex_later, r}, {one_neg, r}, {pos, r}});
  REQUIRE(front.size() == 4);
  for (const auto& e : front) CHECK(e.canonical == (e.a == pos));
  const auto without = pareto_front({{two_neg, r}, {one_neg, r}, {lex_later, r}});
  for (const auto& e : without) CHECK(e.canonical == (e.a == lex_later));
}

TEST_CASE("evaluate_any normalizes by the Gram diagonal") {
  const SignalModel model(0.95, 8);
  MetricsReport r;
  REQUIRE(evaluate_any(known(9), model, r));
  const MetricsReport e = evaluate(known(9), model);
  CHECK(objectives(r) == objectives(e));
  CHECK_FALSE(evaluate_any(ParamVector{}, model, r));
}

TEST_CASE("front CSV keeps canonical rows only") {
  const auto cands = evaluate_all(std::vector<ParamVector>(known_optimal().begin(), known_optimal().end()));
  const auto front = pareto_front(cands);
  std::ostringstream out;
  write_front_csv(out, front);
  const std::string text = out.str();
  CHECK(text.rfind("rank,a1,a2,a3,a4,a5,a6,a7,a8,epsilon,", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 1 + static_cast<long>(ranked_canonical(front).size()));
}

TEST_CASE("full search is independent of the worker count" * doctest::timeout(600)) {
  SearchOptions one;
  one.workers = 1;
  SearchOptions three;
  three.workers = 3;
  const SearchResult r1 = run_search(one);
  const SearchResult r3 = run_search(three);
  CHECK(r1.total == kCandidateCount);
  CHECK(r1.feasible == 2821);
  CHECK(r1.evaluated == 2821);
  CHECK(r1.skipped == 0);
  std::ostringstream c1, c3;
  write_front_csv(c1, r1.front);
  write_front_csv(c3, r3.front);
  CHECK(c1.str() == c3.str());
  CHECK(r1.front.size() == r3.front.size());

  const KnownComparison cmp = compare_with_known(r1.front, SignalModel(0.95, 8));
  CHECK(cmp.missing.empty());
  CHECK_FALSE(cmp.known_dominated);
  CHECK_FALSE(cmp.front_dominated_by_known);
}
