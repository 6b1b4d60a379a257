#pragma once

// Top level: run the nearby, distant and far-distant candidates on the scaled
// instance, check each one, keep the best under the solution ordering.

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "distant_far.hpp"
#include "geom.hpp"
#include "nearby.hpp"
#include "oracle.hpp"
#include "restricted.hpp"

namespace pctc {

enum class CaseFilter { All, Nearby, Distant, Far };
enum class CaseTag { Nearby = 0, Distant = 1, Far = 2 };

inline const char* case_name(CaseTag t) {
  switch (t) {
    case CaseTag::Nearby: return "nearby";
    case CaseTag::Distant: return "distant";
    case CaseTag::Far: return "far";
  }
  return "?";
}

struct SolveConfig {
  int angle_count = 360;
  int m_grid = 16;
  Tolerance tol;
  std::uint64_t seed = kDefaultSeed;
  CaseFilter filter = CaseFilter::All;
  bool oracle_check = false;
  std::string svg_path;
};

struct Verification {
  double coverage = 0.0;  // worst distance of a point outside both disks
  double pcc = 0.0;       // max(0, center distance - delta)
  bool ok(double eps) const { return coverage <= eps && pcc <= eps; }
};

inline Verification verify_solution(std::span<const Point> pts, double delta, const Disk& d1, const Disk& d2) {
  Verification v;
  for (const Point& p : pts) {
    const double e = std::min(dist(p, d1.center) - d1.radius, dist(p, d2.center) - d2.radius);
    v.coverage = std::max(v.coverage, e);
  }
  v.pcc = std::max(0.0, dist(d1.center, d2.center) - delta);
  return v;
}

inline Verification verify_solution(std::span<const Point> pts, double delta, const PartitionSolution& s) {
  return verify_solution(pts, delta, s.d1, s.d2);
}

// Regime of a pair by its center distance relative to the cost.
inline CaseTag regime_of(const PartitionSolution& s, double band) {
  const double d = s.center_distance();
  if (d <= s.cost + band) return CaseTag::Nearby;
  if (d <= 3.0 * s.cost + band) return CaseTag::Distant;
  return CaseTag::Far;
}

struct Candidate {
  bool present = false;
  PartitionSolution solution;  // original coordinates
  Verification verification;
  double seconds = 0.0;
};

struct SolveReport {
  PartitionSolution solution;
  CaseTag tag = CaseTag::Nearby;
  std::array<Candidate, 3> candidates;  // indexed by CaseTag
  Verification verification;
  NearbyStats nearby;
  CaseStats distant, far;
  RestrictedStats restricted;
  std::size_t cache_entries = 0, cache_hits = 0;
  double seconds = 0.0;
  bool trivial = false;  // n = 1 or delta = 0 shortcut
  std::optional<oracle::PctcResult> oracle;
  bool oracle_agrees = true;
};

namespace detail {

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline PartitionSolution single_disk(const Disk& d) {
  PartitionSolution s;
  s.d1 = d;
  s.d2 = {d.center, 0.0};
  s.cost = d.radius;
  return s;
}

inline PartitionSolution unscale(PartitionSolution s, const AffineMap& map) {
  s.d1 = map.invert(s.d1);
  s.d2 = map.invert(s.d2);
  s.cost = std::max(s.d1.radius, s.d2.radius);
  return s;
}

}  // namespace detail

inline SolveReport solve(std::span<const Point> points, double delta, const SolveConfig& cfg = {}) {
  if (points.empty()) throw GeometryError("solve of an empty instance");
  if (delta < 0.0) throw GeometryError("negative delta");
  if (!cfg.tol.valid()) throw GeometryError("tolerances must satisfy 0 < eps_geom <= eps_opt <= eps_eq < 1");
  const auto t0 = std::chrono::steady_clock::now();
  SolveReport rep;
  const std::vector<Point> input(points.begin(), points.end());
  auto [map, pts] = scale_to_unit_square(input);
  const double d = delta * map.scale;
  const double band = cfg.tol.eps_eq;

  // Everything in one disk, with a zero disk at its center.
  const PartitionSolution baseline = detail::single_disk(med(pts, cfg.seed));
  if (input.size() == 1 || d == 0.0) {
    rep.trivial = true;
    rep.solution = detail::unscale(baseline, map);
  } else {
    SplitCache cache;
    auto want = [&](CaseFilter f) { return cfg.filter == CaseFilter::All || cfg.filter == f; };
    std::optional<PartitionSolution> best = baseline;
    auto keep = [&](CaseTag tag, const std::optional<PartitionSolution>& s, std::chrono::steady_clock::time_point t) {
      Candidate& c = rep.candidates[int(tag)];
      c.seconds = detail::seconds_since(t);
      if (!s) return;
      c.present = true;
      c.solution = detail::unscale(*s, map);
      c.verification = verify_solution(input, delta, c.solution);
      if (better_solution(*s, *best, band)) best = s;
    };
    if (want(CaseFilter::Far)) {
      const auto t = std::chrono::steady_clock::now();
      CaseResult r = far_scaled(pts, d, cfg.angle_count, cfg.tol, cache);
      rep.far = r.stats;
      keep(CaseTag::Far, r.solution, t);
    }
    if (want(CaseFilter::Nearby)) {
      const auto t = std::chrono::steady_clock::now();
      NearbyConfig nc;
      nc.angle_count = cfg.angle_count;
      nc.m_grid = cfg.m_grid;
      nc.tol = cfg.tol;
      NearbyResult r = nearby_scaled(pts, d, nc, cache);
      rep.nearby = r.stats;
      keep(CaseTag::Nearby, r.solution, t);
    }
    if (want(CaseFilter::Distant)) {
      const auto t = std::chrono::steady_clock::now();
      CaseResult r = distant_scaled(pts, d, cfg.angle_count, cfg.tol, cache, best->cost, best->companion());
      rep.distant = r.stats;
      keep(CaseTag::Distant, r.solution, t);
    }
    rep.restricted = cache.stats;
    rep.cache_entries = cache.size();
    rep.cache_hits = cache.hits;

    rep.solution = detail::unscale(*best, map);
    // Among candidates tied with the winner, prefer the one whose regime the
    // winner actually falls in, then the fixed case order.
    const CaseTag reg = regime_of(*best, band);
    std::optional<CaseTag> tag;
    for (int k = 0; k < 3; ++k) {
      const Candidate& c = rep.candidates[k];
      if (!c.present) continue;
      const PartitionSolution cs = [&] {
        PartitionSolution s = c.solution;
        s.d1 = map.apply(s.d1);
        s.d2 = map.apply(s.d2);
        s.cost = std::max(s.d1.radius, s.d2.radius);
        return s;
      }();
      if (std::abs(cs.cost - best->cost) > band || std::abs(cs.companion() - best->companion()) > band) continue;
      if (!tag || CaseTag(k) == reg) tag = CaseTag(k);
      if (CaseTag(k) == reg) break;
    }
    rep.tag = tag.value_or(reg);
  }
  rep.verification = verify_solution(input, delta, rep.solution);
  if (cfg.oracle_check && input.size() <= 12) {
    rep.oracle = oracle::oracle_pctc(input, delta);
    const double scale = std::max(1.0, rep.oracle->cost);
    rep.oracle_agrees = std::abs(rep.oracle->cost - rep.solution.cost) <= 1e-6 * scale &&
                        std::abs(rep.oracle->companion - rep.solution.companion()) <= 1e-6 * scale;
  }
  rep.seconds = detail::seconds_since(t0);
  return rep;
}

}  // namespace pctc
