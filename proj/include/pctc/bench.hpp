#pragma once

// Doubling-n benchmark over the generators. Counters are deterministic in the
// seed; wall times are not.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "generate.hpp"
#include "solver.hpp"

namespace pctc::bench {

struct Suite {
  std::vector<gen::Kind> kinds;
  std::vector<int> ns;
  int reps = 1;
  std::uint64_t seed = kDefaultSeed;
  gen::Params params;
  SolveConfig cfg;
};

struct Row {
  gen::Kind kind = gen::Kind::Uniform;
  int n = 0;
  int reps = 0;
  double median_seconds = 0.0;
  double median_evaluations = 0.0;  // nearby cell evaluations
  double median_contexts = 0.0;
  double evals_per_context = 0.0;
  double ratio_nlogn = 0.0;         // evals per context / (n log2 n)
  double max_budget_ratio = 0.0;    // worst context against its own budget unit
  std::array<int, 3> tags{};        // winners by case
};

inline double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

inline std::uint64_t instance_seed(std::uint64_t seed, int n, int rep) {
  std::uint64_t h = seed ^ (std::uint64_t(n) * 0x9E3779B97F4A7C15ULL) ^ (std::uint64_t(rep) << 32);
  h ^= h >> 29; h *= 0xBF58476D1CE4E5B9ULL; h ^= h >> 32;
  return h;
}

template <class Progress>
std::vector<Row> run(const Suite& s, Progress&& progress) {
  std::vector<Row> rows;
  for (gen::Kind kind : s.kinds)
    for (int n : s.ns) {
      Row row;
      row.kind = kind;
      row.n = n;
      row.reps = std::max(1, s.reps);
      std::vector<double> secs, evals, ctxs, per;
      for (int rep = 0; rep < row.reps; ++rep) {
        const gen::Generated g = gen::generate(kind, n, instance_seed(s.seed, n, rep), s.params);
        const SolveReport r = solve(g.instance.points, g.instance.delta, s.cfg);
        secs.push_back(r.seconds);
        evals.push_back(double(r.nearby.evaluations));
        ctxs.push_back(double(r.nearby.contexts));
        per.push_back(r.nearby.contexts ? double(r.nearby.evaluations) / r.nearby.contexts : 0.0);
        row.max_budget_ratio = std::max(row.max_budget_ratio, r.nearby.max_budget_ratio);
        ++row.tags[int(r.tag)];
        progress(row, rep, r);
      }
      row.median_seconds = median(secs);
      row.median_evaluations = median(evals);
      row.median_contexts = median(ctxs);
      row.evals_per_context = median(per);
      row.ratio_nlogn = n > 1 ? row.evals_per_context / (n * std::log2(double(n))) : 0.0;
      rows.push_back(row);
    }
  return rows;
}

inline std::vector<Row> run(const Suite& s) {
  return run(s, [](const Row&, int, const SolveReport&) {});
}

// Least-squares slope of log(median time) against log(n) for one kind.
inline double loglog_slope(const std::vector<Row>& rows, gen::Kind kind) {
  std::vector<std::pair<double, double>> xy;
  for (const Row& r : rows)
    if (r.kind == kind && r.n > 0 && r.median_seconds > 0.0) xy.push_back({std::log(double(r.n)), std::log(r.median_seconds)});
  if (xy.size() < 2) return 0.0;
  double mx = 0, my = 0;
  for (auto [x, y] : xy) { mx += x; my += y; }
  mx /= xy.size();
  my /= xy.size();
  double sxx = 0, sxy = 0;
  for (auto [x, y] : xy) { sxx += (x - mx) * (x - mx); sxy += (x - mx) * (y - my); }
  return sxx > 0 ? sxy / sxx : 0.0;
}

inline std::string format_table(const std::vector<Row>& rows, bool with_time = true) {
  std::string s;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-18s %6s %4s %10s %10s %8s %12s %10s %10s %s\n", "kind", "n", "reps",
                with_time ? "sec" : "-", "evals", "ctx", "evals/ctx", "/nlogn", "budget", "nearby/distant/far");
  s += buf;
  for (const Row& r : rows) {
    char t[32];
    if (with_time) std::snprintf(t, sizeof t, "%.3f", r.median_seconds); else std::snprintf(t, sizeof t, "-");
    std::snprintf(buf, sizeof buf, "%-18s %6d %4d %10s %10.0f %8.0f %12.1f %10.4f %10.4f %d/%d/%d\n", gen::kind_name(r.kind), r.n,
                  r.reps, t, r.median_evaluations, r.median_contexts, r.evals_per_context, r.ratio_nlogn, r.max_budget_ratio,
                  r.tags[0], r.tags[1], r.tags[2]);
    s += buf;
  }
  return s;
}

}  // namespace pctc::bench
