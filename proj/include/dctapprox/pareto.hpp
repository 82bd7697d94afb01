#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "dctapprox/metrics.hpp"
#include "dctapprox/params.hpp"

namespace dctapprox {

/// 7^8 parameter vectors in the search space.
inline constexpr std::uint32_t kCandidateCount = 5764801;

/// The index-th vector in lexicographic order (a1 most significant, values
/// ordered -2, -1, -1/2, 0, 1/2, 1, 2).
ParamVector candidate_at(std::uint32_t index);

/// Calls `fn` for every vector of the search space, in lexicographic order.
void enumerate_candidates(const std::function<void(const ParamVector&)>& fn);

/// All feasible vectors, in lexicographic order.
std::vector<ParamVector> feasible_candidates();

/// (epsilon, MSE, -Cg, -eta) quantized to 1e-9, then additions and shifts.
using Objectives = std::array<std::int64_t, 6>;

Objectives objectives(const MetricsReport& r);

/// x dominates y: x <= y everywhere and x < y somewhere.
bool dominates(const Objectives& x, const Objectives& y);

struct Candidate {
  ParamVector a;
  MetricsReport report;
};

struct ParetoEntry {
  ParamVector a;
  MetricsReport report;
  /// Representative of its group of identical objective vectors.
  bool canonical = false;
};

/// Non-dominated candidates. Every member of a tie group is returned; the one
/// with the most nonnegative components (then lexicographically smallest) is
/// marked canonical. Output is ordered by additions, epsilon, then a.
std::vector<ParetoEntry> pareto_front(std::vector<Candidate> candidates);

struct SearchOptions {
  double rho = kDefaultRho;
  int workers = 1;
  bool feasibility_filter = true;
};

struct SearchResult {
  std::uint32_t total = 0;
  std::uint32_t feasible = 0;
  /// Candidates whose metrics were computed.
  std::uint32_t evaluated = 0;
  /// Candidates dropped because a zero row or singular matrix left the
  /// metrics undefined (only without the feasibility filter).
  std::uint32_t skipped = 0;
  std::vector<ParetoEntry> front;
};

/// Full sweep. Workers split the index range into contiguous chunks, reduce
/// each chunk to its local front, then merge; the result does not depend on
/// the worker count.
SearchResult run_search(const SearchOptions& options);

/// Metrics for an arbitrary vector: S(a) T(a) with S from the Gram diagonal.
/// Returns false when a row of T(a) is zero or the matrix is singular.
bool evaluate_any(const ParamVector& a, const SignalModel& model, MetricsReport& out);

/// Canonical entries sorted by additions then epsilon; rank is 1-based.
std::vector<ParetoEntry> ranked_canonical(const std::vector<ParetoEntry>& front);

/// rank,a1..a8,epsilon,mse,cg,eta,adds,shifts plus 2-decimal columns.
void write_front_csv(std::ostream& out, const std::vector<ParetoEntry>& front);

struct KnownComparison {
  std::vector<ParamVector> missing;  // known optimal vectors absent from the canonical front
  std::vector<ParamVector> surplus;  // canonical front vectors not among the known ones
  /// A front member dominated by a known optimal vector (should never happen).
  bool front_dominated_by_known = false;
  /// A known vector dominated by some evaluated candidate.
  bool known_dominated = false;
};

KnownComparison compare_with_known(const std::vector<ParetoEntry>& front, const SignalModel& model);

}  // namespace dctapprox
