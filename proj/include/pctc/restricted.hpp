#pragma once

// Best optimal disk pair for a fixed bipartition (P1, P2) under the
// proximity bound delta.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <set>
#include <unordered_map>
#include <span>
#include <utility>
#include <vector>

#include "fpvd.hpp"
#include "geom.hpp"
#include "hull.hpp"

namespace pctc {

struct PartitionSolution {
  Disk d1;
  Disk d2;
  int determining = 0;  // 0: d1 is the larger disk, 1: d2
  double cost = 0.0;
  bool tight = false;
  std::vector<int> dominating1;  // indices into the first part
  std::vector<int> dominating2;

  double companion() const { return std::min(d1.radius, d2.radius); }
  double center_distance() const { return dist(d1.center, d2.center); }
};

struct RestrictedStats {
  long weight_tests = 0;
  long contact_solves = 0;
  long fallbacks = 0;
  long early_exits = 0;

  RestrictedStats& operator+=(const RestrictedStats& o) {
    weight_tests += o.weight_tests;
    contact_solves += o.contact_solves;
    fallbacks += o.fallbacks;
    early_exits += o.early_exits;
    return *this;
  }
};

namespace detail {

inline double extent_of(std::span<const Point> a, std::span<const Point> b) {
  double lx = kInf, ly = kInf, hx = -kInf, hy = -kInf;
  for (auto s : {a, b})
    for (const Point& p : s) {
      lx = std::min(lx, p.x); ly = std::min(ly, p.y);
      hx = std::max(hx, p.x); hy = std::max(hy, p.y);
    }
  const double e = std::max(hx - lx, hy - ly);
  return e > 0.0 ? e : 1.0;
}

inline double cover_radius(std::span<const Point> pts, Point c) {
  double r = 0.0;
  for (const Point& p : pts) r = std::max(r, dist(p, c));
  return r;
}

// Binary search over sorted weights for a monotone distance test. Returns the
// bracketing window, or an exact hit when the test lands within band.
struct WeightWindow {
  double lo, hi;
  std::optional<double> hit;
};

template <class Dist>
WeightWindow weight_search(const std::vector<double>& w, double lo, double hi, double delta, double band,
                           Dist&& d, long* tests) {
  std::vector<double> in;
  for (double x : w)
    if (x > lo && x < hi) in.push_back(x);
  long a = -1, b = static_cast<long>(in.size());
  while (b - a > 1) {
    const long m = (a + b) / 2;
    const double v = d(in[m]);
    if (tests) ++*tests;
    if (std::abs(v - delta) <= band) return {lo, hi, in[m]};
    if (v > delta) a = m; else b = m;
  }
  return {a < 0 ? lo : in[a], b == static_cast<long>(in.size()) ? hi : in[b], std::nullopt};
}

template <class G>
double bisect_first(G&& g, double lo, double hi) {
  // g(lo) > 0 and g(hi) <= 0 assumed; returns the smallest r with g(r) <= 0.
  for (int it = 0; it < 200 && hi - lo > 2e-16 * std::max(1.0, std::abs(hi)); ++it) {
    const double m = 0.5 * (lo + hi);
    if (g(m) <= 0.0) hi = m; else lo = m;
  }
  return hi;
}

inline std::vector<std::pair<int, int>> label_pairs(const IntersectionHull& a, const IntersectionHull& b) {
  std::set<std::pair<int, int>> s;
  for (const MiniArc& m : mini_arcs(a, b)) s.insert({m.x_site, m.y_site});
  for (const MiniArc& m : mini_arcs(b, a)) s.insert({m.y_site, m.x_site});
  return {s.begin(), s.end()};
}

inline ArcTrack track_site(const Fpvd& f, const IntersectionHull& H, int site) {
  if (H.shape == HullShape::Point) return ArcTrack::freeze(ArcGeom::point(H.root));
  if (const HullArc* a = H.arc_of_site(site)) return ArcTrack::of(f, H, *a);
  return ArcTrack::freeze(ArcGeom::point(H.root));
}

}  // namespace detail

// Minimal equal radius r with dist(H1(r), H2(r)) <= delta.
inline double equal_radius_cost(const Fpvd& f1, const Fpvd& f2, double delta, const Tolerance& tol = {},
                                 double scale = 1.0, RestrictedStats* st = nullptr) {
  const double r1 = f1.root_weight, r2 = f2.root_weight;
  const double L = std::max(r1, r2);
  const double d0 = dist(f1.root, f2.root);
  if (d0 <= delta) {
    if (st) ++st->early_exits;
    return L;
  }
  auto hd = [&](double r) { return hull_distance(intersection_hull(f1, r), intersection_hull(f2, r)).d; };
  const double band = tol.eps_eq * scale;
  if (hd(L) <= delta + band) return L;
  const double U = std::max(L, 0.5 * (d0 - delta + r1 + r2));

  std::vector<double> w = sorted_vertex_weights(f1, tol.eps_eq);
  for (double x : sorted_vertex_weights(f2, tol.eps_eq)) w.push_back(x);
  std::sort(w.begin(), w.end());
  auto win = detail::weight_search(w, L, U, delta, band, hd, st ? &st->weight_tests : nullptr);
  if (win.hit) return *win.hit;
  const double i0 = win.lo, i1 = win.hi;

  // Candidate arc pairs from mini-arc labels at two radii inside the window.
  std::set<std::pair<int, int>> labels;
  for (double frac : {1e-3, 0.5}) {
    const double rr = i0 + (i1 - i0) * frac;
    for (auto lp : detail::label_pairs(intersection_hull(f1, rr), intersection_hull(f2, rr))) labels.insert(lp);
  }
  const double rep = i0 + (i1 - i0) * 0.5;
  const IntersectionHull H1 = intersection_hull(f1, rep), H2 = intersection_hull(f2, rep);
  double best = kInf;
  for (auto [x, y] : labels) {
    if (st) ++st->contact_solves;
    auto r = arc_contact_radius(detail::track_site(f1, H1, x), detail::track_site(f2, H2, y), delta, i0, i1);
    if (r) best = std::min(best, *r);
  }
  const double eta = tol.eps_opt * scale;
  const bool ok = best < kInf && hd(best) <= delta + band && (best - eta <= i0 || hd(best - eta) > delta);
  if (ok) return best;
  if (st) ++st->fallbacks;
  return detail::bisect_first([&](double r) { return hd(r) - delta; }, i0, i1);
}

// Minimal radius of the other side with its hull within delta of the frozen
// hull H_fixed(r_fixed). Searches [other MED radius, r_hi].
inline double min_companion_radius(const Fpvd& fixed, double r_fixed, const Fpvd& other, double delta,
                                   double r_hi, const Tolerance& tol = {}, double scale = 1.0,
                                   RestrictedStats* st = nullptr) {
  const IntersectionHull Hf = intersection_hull(fixed, r_fixed);
  if (Hf.empty()) throw GeometryError("companion search with an empty frozen hull");
  const double lo = other.root_weight;
  auto hd = [&](double r) { return hull_distance(Hf, intersection_hull(other, r)).d; };
  const double band = tol.eps_eq * scale;
  if (hd(lo) <= delta + band) return lo;
  if (r_hi <= lo || hd(r_hi) > delta + band) {
    // Infeasible below r_hi: report r_hi and let the caller see the residual.
    return std::max(lo, r_hi);
  }
  auto win = detail::weight_search(sorted_vertex_weights(other, tol.eps_eq), lo, r_hi, delta, band, hd,
                                   st ? &st->weight_tests : nullptr);
  if (win.hit) return *win.hit;
  const double i0 = win.lo, i1 = win.hi;

  std::set<std::pair<int, int>> labels;
  for (double frac : {1e-3, 0.5}) {
    const double rr = i0 + (i1 - i0) * frac;
    for (auto lp : detail::label_pairs(Hf, intersection_hull(other, rr))) labels.insert(lp);
  }
  const double rep = i0 + (i1 - i0) * 0.5;
  const IntersectionHull Ho = intersection_hull(other, rep);
  double best = kInf;
  for (auto [x, y] : labels) {
    if (st) ++st->contact_solves;
    const HullArc* a = Hf.arc_of_site(x);
    ArcTrack fx = ArcTrack::freeze(a ? a->geom : ArcGeom::point(Hf.root));
    auto r = arc_contact_radius(fx, detail::track_site(other, Ho, y), delta, i0, i1);
    if (r) best = std::min(best, *r);
  }
  const double eta = tol.eps_opt * scale;
  const bool ok = best < kInf && hd(best) <= delta + band && (best - eta <= i0 || hd(best - eta) > delta);
  if (ok) return best;
  if (st) ++st->fallbacks;
  return detail::bisect_first([&](double r) { return hd(r) - delta; }, i0, i1);
}

// Turn two centers into a feasible pair with exact covering radii.
inline PartitionSolution finalize_pair(std::span<const Point> p1, std::span<const Point> p2, Point c1, Point c2,
                                       double delta, const Tolerance& tol, double scale, bool med_far) {
  const double gap = dist(c1, c2);
  if (gap > delta) c2 = c1 + (c2 - c1) * (delta / gap);
  PartitionSolution s;
  s.d1 = {c1, p1.empty() ? 0.0 : detail::cover_radius(p1, c1)};
  s.d2 = {c2, p2.empty() ? 0.0 : detail::cover_radius(p2, c2)};
  s.determining = s.d1.radius >= s.d2.radius ? 0 : 1;
  s.cost = std::max(s.d1.radius, s.d2.radius);
  s.tight = med_far && std::abs(dist(c1, c2) - delta) <= tol.eps_eq * scale;
  s.dominating1 = boundary_points(p1, s.d1, tol.eps_eq);
  s.dominating2 = boundary_points(p2, s.d2, tol.eps_eq);
  return s;
}

inline PartitionSolution solve_restricted(std::span<const Point> p1, std::span<const Point> p2, double delta,
                                          const Tolerance& tol = {}, const Fpvd* f1in = nullptr,
                                          const Fpvd* f2in = nullptr, RestrictedStats* st = nullptr) {
  if (p1.empty() && p2.empty()) throw GeometryError("restricted solve with two empty parts");
  const double scale = detail::extent_of(p1, p2);
  if (p1.empty() || p2.empty()) {
    const bool first = !p1.empty();
    const Disk m = med(first ? p1 : p2);
    const Disk z{m.center, 0.0};
    return finalize_pair(p1, p2, first ? m.center : z.center, first ? z.center : m.center, delta, tol, scale,
                         false);
  }
  std::optional<Fpvd> own1, own2;
  const Fpvd& f1 = f1in ? *f1in : own1.emplace(build_fpvd(p1));
  const Fpvd& f2 = f2in ? *f2in : own2.emplace(build_fpvd(p2));

  const double d0 = dist(f1.root, f2.root);
  if (d0 <= delta) {
    if (st) ++st->early_exits;
    return finalize_pair(p1, p2, f1.root, f2.root, delta, tol, scale, false);
  }
  const double rs = equal_radius_cost(f1, f2, delta, tol, scale, st);
  // Either side may be the determining one; minimise the other.
  const double ra = min_companion_radius(f1, rs, f2, delta, rs, tol, scale, st);
  const double rb = min_companion_radius(f2, rs, f1, delta, rs, tol, scale, st);
  double r1 = rs, r2 = ra;
  if (rb < ra) { r1 = rb; r2 = rs; }
  const Closest w = hull_distance(intersection_hull(f1, r1), intersection_hull(f2, r2));
  Point c1 = w.a, c2 = w.b;
  if (!(w.d < kInf)) { c1 = f1.root; c2 = f2.root; }
  return finalize_pair(p1, p2, c1, c2, delta, tol, scale, true);
}

// Convenience overload taking a membership mask over one point list.
inline PartitionSolution solve_restricted_mask(std::span<const Point> pts, const std::vector<char>& in_first,
                                               double delta, const Tolerance& tol = {},
                                               RestrictedStats* st = nullptr) {
  std::vector<Point> a, b;
  for (std::size_t i = 0; i < pts.size(); ++i) (in_first[i] ? a : b).push_back(pts[i]);
  return solve_restricted(a, b, delta, tol, nullptr, nullptr, st);
}

inline double equal_radius_cost(std::span<const Point> p1, std::span<const Point> p2, double delta,
                                const Tolerance& tol = {}) {
  if (p1.empty() || p2.empty()) return med(p1.empty() ? p2 : p1).radius;
  const double scale = detail::extent_of(p1, p2);
  return equal_radius_cost(build_fpvd(p1), build_fpvd(p2), delta, tol, scale);
}

// Strict order: cost, then the smaller radius, both within band; then centers
// lexicographically so equal pairs still pick deterministically.
inline bool better_solution(const PartitionSolution& a, const PartitionSolution& b, double band) {
  if (a.cost < b.cost - band) return true;
  if (b.cost < a.cost - band) return false;
  if (a.companion() < b.companion() - band) return true;
  if (b.companion() < a.companion() - band) return false;
  auto key = [](const PartitionSolution& s) {
    Point u = s.d1.center, v = s.d2.center;
    if (lex_less(v, u)) std::swap(u, v);
    return std::array<double, 4>{u.x, u.y, v.x, v.y};
  };
  return key(a) < key(b);
}

// Bit set over a fixed point list; bit k set means point k is in the second part.
using SplitMask = std::vector<std::uint64_t>;

inline SplitMask make_mask(std::size_t n) { return SplitMask((n + 63) / 64, 0); }
inline void mask_set(SplitMask& m, std::size_t k) { m[k / 64] |= std::uint64_t{1} << (k % 64); }
inline bool mask_test(const SplitMask& m, std::size_t k) { return (m[k / 64] >> (k % 64)) & 1u; }

struct SplitMaskHash {
  std::size_t operator()(const SplitMask& m) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint64_t w : m) h = (h ^ w) * 0x100000001b3ull + (h >> 29);
    return static_cast<std::size_t>(h);
  }
};

// Restricted result with dominating points as indices into the full list.
struct SplitRecord {
  PartitionSolution sol;
  std::vector<int> dom1, dom2;
  double med1 = 0.0, med2 = 0.0;  // MED radii of the two parts
};

class SplitCache {
 public:
  std::size_t hits = 0, misses = 0;
  RestrictedStats stats;

  // compute(rec) fills rec for a miss.
  template <class F>
  const SplitRecord& get(const SplitMask& key, F&& compute) {
    auto it = map_.find(key);
    if (it != map_.end()) { ++hits; return it->second; }
    ++misses;
    SplitRecord rec;
    compute(rec);
    return map_.emplace(key, std::move(rec)).first->second;
  }
  std::size_t size() const { return map_.size(); }

 private:
  std::unordered_map<SplitMask, SplitRecord, SplitMaskHash> map_;
};

// Solve the split given by mask from scratch, or through the cache.
inline const SplitRecord& solve_split(std::span<const Point> pts, const SplitMask& second, double delta,
                                      const Tolerance& tol, SplitCache& cache) {
  return cache.get(second, [&](SplitRecord& rec) {
    std::vector<Point> a, b;
    std::vector<int> ia, ib;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (mask_test(second, k)) { b.push_back(pts[k]); ib.push_back(int(k)); }
      else { a.push_back(pts[k]); ia.push_back(int(k)); }
    }
    rec.sol = solve_restricted(a, b, delta, tol, nullptr, nullptr, &cache.stats);
    for (int k : rec.sol.dominating1) rec.dom1.push_back(ia[k]);
    for (int k : rec.sol.dominating2) rec.dom2.push_back(ib[k]);
    rec.med1 = a.empty() ? 0.0 : med(a).radius;
    rec.med2 = b.empty() ? 0.0 : med(b).radius;
  });
}

}  // namespace pctc
