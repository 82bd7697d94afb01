#include "dctapprox/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <thread>

#include "dctapprox/csv.hpp"
#include "dctapprox/dct_core.hpp"
#include "dctapprox/error.hpp"

namespace dctapprox {

ParamVector candidate_at(std::uint32_t index) {
  std::array<int, kParamCount> d{};
  for (int i = kParamCount - 1; i >= 0; --i) {
    d[static_cast<std::size_t>(i)] = kDoubledValues[index % 7];
    index /= 7;
  }
  return ParamVector::from_doubled(d);
}

void enumerate_candidates(const std::function<void(const ParamVector&)>& fn) {
  for (std::uint32_t i = 0; i < kCandidateCount; ++i) fn(candidate_at(i));
}

std::vector<ParamVector> feasible_candidates() {
  std::vector<ParamVector> out;
  enumerate_candidates([&](const ParamVector& a) {
    if (is_feasible(a)) out.push_back(a);
  });
  return out;
}

Objectives objectives(const MetricsReport& r) {
  auto q = [](double v) { return static_cast<std::int64_t>(std::llround(v * 1e9)); };
  return {q(r.epsilon), q(r.mse), q(-r.coding_gain_db), q(-r.efficiency_pct), r.additions, r.shifts};
}

bool dominates(const Objectives& x, const Objectives& y) {
  bool strict = false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > y[i]) return false;
    if (x[i] < y[i]) strict = true;
  }
  return strict;
}

namespace {

int nonnegative_count(const ParamVector& a) {
  int n = 0;
  for (int i = 0; i < kParamCount; ++i) n += a.doubled(i) >= 0;
  return n;
}

bool canonical_before(const ParamVector& x, const ParamVector& y) {
  const int nx = nonnegative_count(x), ny = nonnegative_count(y);
  if (nx != ny) return nx > ny;
  return x < y;
}

// Front of `items` without canonical marking, in lexicographic objective
// order. A point can only be dominated by one sorting strictly before it.
std::vector<Candidate> local_front(std::vector<Candidate> items) {
  std::vector<std::pair<Objectives, Candidate>> keyed;
  keyed.reserve(items.size());
  for (auto& c : items) keyed.emplace_back(objectives(c.report), c);
  std::sort(keyed.begin(), keyed.end(), [](const auto& l, const auto& r) {
    if (l.first != r.first) return l.first < r.first;
    return l.second.a < r.second.a;
  });
  std::vector<std::pair<Objectives, Candidate>> front;
  for (auto& k : keyed) {
    const bool dominated = std::any_of(front.begin(), front.end(),
                                       [&](const auto& f) { return dominates(f.first, k.first); });
    if (!dominated) front.push_back(std::move(k));
  }
  std::vector<Candidate> out;
  out.reserve(front.size());
  for (auto& f : front) out.push_back(std::move(f.second));
  return out;
}

bool rank_before(const ParetoEntry& x, const ParetoEntry& y) {
  if (x.report.additions != y.report.additions) return x.report.additions < y.report.additions;
  const auto ex = objectives(x.report)[0], ey = objectives(y.report)[0];
  if (ex != ey) return ex < ey;
  return x.a < y.a;
}

}  // namespace

std::vector<ParetoEntry> pareto_front(std::vector<Candidate> candidates) {
  std::vector<Candidate> front = local_front(std::move(candidates));
  std::map<Objectives, ParamVector> representative;
  for (const auto& c : front) {
    const Objectives o = objectives(c.report);
    auto it = representative.find(o);
    if (it == representative.end()) {
      representative.emplace(o, c.a);
    } else if (canonical_before(c.a, it->second)) {
      it->second = c.a;
    }
  }
  std::vector<ParetoEntry> out;
  out.reserve(front.size());
  for (const auto& c : front) {
    out.push_back({c.a, c.report, representative.at(objectives(c.report)) == c.a});
  }
  std::sort(out.begin(), out.end(), rank_before);
  return out;
}

bool evaluate_any(const ParamVector& a, const SignalModel& model, MetricsReport& out) {
  const DyadicMatrix t = build_t(a);
  const DyadicMatrix g = gram(t);
  Eigen::MatrixXd c = t.to_real();
  for (int k = 0; k < 8; ++k) {
    if (g.num(k, k) <= 0) return false;
    c.row(k) /= std::sqrt(g.value(k, k));
  }
  try {
    out = evaluate_matrix(c, model);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kSingular) return false;
    throw;
  }
  const ComplexityCount cc = complexity(a);
  out.additions = cc.additions;
  out.shifts = cc.shifts;
  return true;
}

SearchResult run_search(const SearchOptions& options) {
  const SignalModel model(options.rho, 8);
  const int workers = std::max(1, options.workers);

  struct Partial {
    std::uint32_t feasible = 0, evaluated = 0, skipped = 0;
    std::vector<Candidate> front;
  };
  std::vector<Partial> partials(static_cast<std::size_t>(workers));

  auto sweep = [&](int w) {
    Partial& p = partials[static_cast<std::size_t>(w)];
    const std::uint64_t begin = static_cast<std::uint64_t>(kCandidateCount) * w / workers;
    const std::uint64_t end = static_cast<std::uint64_t>(kCandidateCount) * (w + 1) / workers;
    std::vector<Candidate> pending;
    for (std::uint64_t i = begin; i < end; ++i) {
      const ParamVector a = candidate_at(static_cast<std::uint32_t>(i));
      const bool feasible = is_feasible(a);
      p.feasible += feasible;
      if (options.feasibility_filter && !feasible) continue;
      MetricsReport r;
      if (!evaluate_any(a, model, r)) {
        ++p.skipped;
        continue;
      }
      ++p.evaluated;
      pending.push_back({a, r});
      // Keep memory bounded on unfiltered sweeps.
      if (pending.size() >= 65536) {
        pending.insert(pending.end(), p.front.begin(), p.front.end());
        p.front = local_front(std::move(pending));
        pending.clear();
      }
    }
    pending.insert(pending.end(), p.front.begin(), p.front.end());
    p.front = local_front(std::move(pending));
  };

  if (workers == 1) {
    sweep(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(sweep, w);
    for (auto& t : threads) t.join();
  }

  SearchResult result;
  result.total = kCandidateCount;
  std::vector<Candidate> merged;
  for (auto& p : partials) {
    result.feasible += p.feasible;
    result.evaluated += p.evaluated;
    result.skipped += p.skipped;
    merged.insert(merged.end(), p.front.begin(), p.front.end());
  }
  result.front = pareto_front(std::move(merged));
  return result;
}

std::vector<ParetoEntry> ranked_canonical(const std::vector<ParetoEntry>& front) {
  std::vector<ParetoEntry> out;
  for (const auto& e : front)
    if (e.canonical) out.push_back(e);
  std::sort(out.begin(), out.end(), rank_before);
  return out;
}

void write_front_csv(std::ostream& out, const std::vector<ParetoEntry>& front) {
  out << "rank," << metrics_csv_header() << '\n';
  int rank = 0;
  for (const auto& e : ranked_canonical(front)) {
    out << ++rank << ',' << metrics_csv_row(e.a, e.report) << '\n';
  }
}

KnownComparison compare_with_known(const std::vector<ParetoEntry>& front, const SignalModel& model) {
  KnownComparison cmp;
  std::vector<std::pair<ParamVector, Objectives>> known;
  for (const auto& a : known_optimal()) known.emplace_back(a, objectives(evaluate(a, model)));

  const auto canonical = ranked_canonical(front);
  for (const auto& [a, o] : known) {
    const bool present = std::any_of(canonical.begin(), canonical.end(), [&](const auto& e) { return e.a == a; });
    if (!present) cmp.missing.push_back(a);
    for (const auto& e : front) {
      if (dominates(objectives(e.report), o)) cmp.known_dominated = true;
      if (dominates(o, objectives(e.report))) cmp.front_dominated_by_known = true;
    }
  }
  for (const auto& e : canonical) {
    const bool listed = std::any_of(known.begin(), known.end(), [&](const auto& k) { return k.first == e.a; });
    if (!listed) cmp.surplus.push_back(e.a);
  }
  return cmp;
}

}  // namespace dctapprox
