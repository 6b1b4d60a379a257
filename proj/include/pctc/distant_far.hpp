#pragma once

// Separated cases. Far: the optimal parts are split by a line perpendicular
// to one of the sampled directions, so every such split is solved outright.
// Distant: the left part of a sampled line sits in the first disk, whose
// center runs along the boundary of the left intersection hull.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <unordered_map>
#include <vector>

#include "fpvd.hpp"
#include "geom.hpp"
#include "hull.hpp"
#include "restricted.hpp"

namespace pctc {

struct CaseStats {
  long lines = 0;
  long distinct = 0;
  long solves = 0;
  long pruned = 0;
  long ftests = 0;
  long g_evaluations = 0;
  long events = 0;
  long jumps = 0;  // find_rl radii where the field distance is discontinuous
  bool early_exit = false;
};

struct CaseResult {
  std::optional<PartitionSolution> solution;
  CaseStats stats;
};

namespace detail {

// Canonical mask of a two-sided split: point 0 is always in the first part.
inline SplitMask canonical(SplitMask m, std::size_t n) {
  if (n > 0 && mask_test(m, 0)) {
    for (auto& w : m) w = ~w;
    if (n % 64) m.back() &= (std::uint64_t{1} << (n % 64)) - 1;
  }
  return m;
}

inline SplitMask side_mask(std::span<const Point> pts, const DirectedLine& l, double eps) {
  SplitMask m = make_mask(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k)
    if (l.side(pts[k]) < -eps) mask_set(m, k);
  return m;
}

}  // namespace detail

// Lines perpendicular to each direction through consecutive projection midpoints.
inline std::vector<DirectedLine> build_far_lines(std::span<const Point> pts, int directions, double eps = 1e-12) {
  std::vector<DirectedLine> out;
  if (pts.size() < 2) return out;
  std::set<SplitMask> seen;
  std::vector<double> pr(pts.size());
  for (int k = 0; k < std::max(directions, 1); ++k) {
    const Point u = unit_from_angle(kPi * k / std::max(directions, 1));
    for (std::size_t i = 0; i < pts.size(); ++i) pr[i] = dot(u, pts[i]);
    std::vector<double> s = pr;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i + 1] - s[i] <= eps) continue;
      const double mid = 0.5 * (s[i] + s[i + 1]);
      const DirectedLine l{u * mid, perp(u)};
      if (seen.insert(detail::canonical(detail::side_mask(pts, l, 0.0), pts.size())).second) out.push_back(l);
    }
  }
  return out;
}

inline CaseResult far_scaled(const std::vector<Point>& pts, double delta, int directions, const Tolerance& tol,
                             SplitCache& cache) {
  CaseResult res;
  for (const DirectedLine& l : build_far_lines(pts, directions, tol.eps_geom)) {
    ++res.stats.lines;
    const SplitMask m = detail::side_mask(pts, l, 0.0);
    const SplitRecord& rec = solve_split(pts, m, delta, tol, cache);
    ++res.stats.solves;
    if (!res.solution || better_solution(rec.sol, *res.solution, tol.eps_eq)) res.solution = rec.sol;
  }
  res.stats.distinct = res.stats.lines;
  return res;
}

inline CaseResult solve_far(std::span<const Point> points, double delta, int directions = 360,
                            const Tolerance& tol = {}) {
  auto [map, pts] = scale_to_unit_square(points);
  SplitCache cache;
  CaseResult r = far_scaled(pts, delta * map.scale, directions, tol, cache);
  if (r.solution) {
    r.solution->d1 = map.invert(r.solution->d1);
    r.solution->d2 = map.invert(r.solution->d2);
    r.solution->cost /= map.scale;
  }
  return r;
}

struct TwoCenter {
  double cost = kInf;
  double center_distance = kInf;
  Disk d1, d2;
  std::vector<SplitMask> optimal;  // every split reaching the cost
  bool exact = true;               // false when only directional sweeps were used
};

// Unconstrained 2-center, with the center distance minimised over optimal splits.
inline TwoCenter two_center_min_distance(const std::vector<Point>& pts, const Tolerance& tol = {},
                                         int directions = 360) {
  TwoCenter tc;
  const std::size_t n = pts.size();
  if (n == 0) return tc;
  if (n == 1) {
    tc.cost = 0.0;
    tc.center_distance = 0.0;
    tc.d1 = tc.d2 = {pts[0], 0.0};
    tc.optimal.push_back(make_mask(1));
    return tc;
  }
  const double eps = tol.eps_eq;
  struct Cand { double cost; SplitMask m; };
  std::vector<Cand> cands;
  std::set<SplitMask> seen;
  auto consider = [&](SplitMask m) {
    m = detail::canonical(std::move(m), n);
    if (!seen.insert(m).second) return;
    std::vector<Point> a, b;
    for (std::size_t k = 0; k < n; ++k) (mask_test(m, k) ? b : a).push_back(pts[k]);
    const double c = std::max(a.empty() ? 0.0 : med(a).radius, b.empty() ? 0.0 : med(b).radius);
    if (c <= tc.cost + eps) {
      tc.cost = std::min(tc.cost, c);
      cands.push_back({c, m});
    }
  };
  if (n <= 12) {
    for (std::uint32_t bits = 0; bits < (1u << (n - 1)); ++bits) {
      SplitMask m = make_mask(n);
      for (std::size_t k = 1; k < n; ++k)
        if ((bits >> (k - 1)) & 1u) mask_set(m, k);
      consider(m);
    }
  } else if (n <= 64) {
    // Every linearly separable split comes from a line through two points.
    consider(make_mask(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        const DirectedLine l{pts[a], pts[b] - pts[a]};
        SplitMask base = make_mask(n);
        std::vector<std::size_t> on;
        for (std::size_t k = 0; k < n; ++k) {
          const double s = l.side(pts[k]);
          if (k == a || k == b || std::abs(s) <= tol.eps_geom) on.push_back(k);
          else if (s < 0.0) mask_set(base, k);
        }
        if (on.size() > 8) on.resize(8);
        // Points on the line go to either side, keeping them contiguous along it.
        std::sort(on.begin(), on.end(), [&](std::size_t x, std::size_t y) { return l.along(pts[x]) < l.along(pts[y]); });
        for (std::size_t cut = 0; cut <= on.size(); ++cut)
          for (int flip = 0; flip < 2; ++flip) {
            SplitMask m = base;
            for (std::size_t t = 0; t < on.size(); ++t)
              if ((t < cut) != bool(flip)) mask_set(m, on[t]);
            consider(m);
          }
      }
  } else {
    tc.exact = false;
    std::vector<std::pair<double, std::size_t>> pr(n);
    for (int k = 0; k < std::max(directions, 1); ++k) {
      const Point u = unit_from_angle(kPi * k / std::max(directions, 1));
      for (std::size_t i = 0; i < n; ++i) pr[i] = {dot(u, pts[i]), i};
      std::sort(pr.begin(), pr.end());
      SplitMask m = make_mask(n);
      consider(m);
      for (std::size_t i = 0; i + 1 < n; ++i) {
        mask_set(m, pr[i].second);
        consider(m);
      }
    }
  }
  for (const Cand& c : cands) {
    if (c.cost > tc.cost + eps) continue;
    tc.optimal.push_back(c.m);
    std::vector<Point> a, b;
    for (std::size_t k = 0; k < n; ++k) (mask_test(c.m, k) ? b : a).push_back(pts[k]);
    if (b.empty()) {
      const Disk d = med(a);
      if (0.0 < tc.center_distance) { tc.center_distance = 0.0; tc.d1 = d; tc.d2 = {d.center, 0.0}; }
      continue;
    }
    const double r = std::max(c.cost, tc.cost);
    const Closest w = hull_distance(intersection_hull(build_fpvd(a), r), intersection_hull(build_fpvd(b), r));
    if (w.d < tc.center_distance) {
      tc.center_distance = w.d;
      tc.d1 = {w.a, r};
      tc.d2 = {w.b, r};
    }
  }
  return tc;
}

// ---- distant case ------------------------------------------------------------

inline std::vector<DirectedLine> build_distant_lines(std::span<const Point> pts, int directions,
                                                     double eps = 1e-12) {
  std::vector<DirectedLine> out;
  if (pts.size() < 2) return out;
  for (int k = 0; k < std::max(directions, 1); ++k) {
    const Point u = unit_from_angle(2.0 * kPi * k / std::max(directions, 1));
    double lo = kInf, hi = -kInf;
    for (const Point& p : pts) { lo = std::min(lo, dot(u, p)); hi = std::max(hi, dot(u, p)); }
    if (hi - lo <= eps) continue;  // degenerate extent
    // Left of the directed line means smaller projection.
    for (int t = 1; t <= 9; ++t) out.push_back({u * (lo + (hi - lo) * t / 9.0), perp(u)});
  }
  return out;
}

struct Field {
  ArcGeom geom;             // an arc piece, or a point for an endpoint field
  bool endpoint = false;
  std::vector<int> uncovered;  // indices into the plus side
};

struct FieldSeq {
  double r = 0.0;
  std::vector<Field> fields;  // clockwise from the leftmost endpoint
};

namespace detail {

inline std::vector<int> uncovered_at(Point x, std::span<const Point> plus, double r, double band) {
  std::vector<int> u;
  for (int k = 0; k < int(plus.size()); ++k)
    if (dist(x, plus[k]) > r + band) u.push_back(k);
  return u;
}

}  // namespace detail

// Cut the boundary of the minus hull at radius r by the radius-r circles
// around the plus points.
inline FieldSeq fields_partition(const Fpvd& pm, std::span<const Point> plus, double r) {
  FieldSeq fs;
  fs.r = r;
  const IntersectionHull H = intersection_hull(pm, r);
  if (H.empty()) throw GeometryError("fields of an empty hull");
  const double band = 1e-12 * std::max(1.0, r);
  if (H.shape == HullShape::Point) {
    fs.fields.push_back({ArcGeom::point(H.root), true, detail::uncovered_at(H.root, plus, r, band)});
    return fs;
  }
  for (const HullArc& a : H.arcs) {
    const ArcGeom& g = a.geom;
    std::vector<double> cuts;  // offsets from g.lo
    for (const Point& p : plus) {
      Point x[2];
      const int k = circle_circle(g.c, g.R, p, r, x);
      for (int t = 0; t < k; ++t) {
        const double u = wrap_two_pi(angle_of(x[t] - g.c) - g.lo);
        if (u > 1e-13 && u < g.span - 1e-13) cuts.push_back(u);
      }
    }
    // Clockwise on the hull is decreasing angle on the arc.
    std::sort(cuts.begin(), cuts.end(), std::greater<>());
    const bool full = g.full();
    std::vector<double> knots;
    knots.push_back(full && !cuts.empty() ? cuts.front() + 0.0 : g.span);
    for (double u : cuts) if (!(full && u == knots.front())) knots.push_back(u);
    knots.push_back(full && !cuts.empty() ? cuts.front() - 2.0 * kPi : 0.0);
    for (std::size_t t = 0; t + 1 < knots.size(); ++t) {
      if (t > 0 || !full || !cuts.empty()) {
        const Point v = g.at_angle(g.lo + knots[t]);
        fs.fields.push_back({ArcGeom::point(v), true, detail::uncovered_at(v, plus, r, band)});
      }
      ArcGeom piece{g.c, g.R, g.lo + knots[t + 1], knots[t] - knots[t + 1]};
      if (piece.span <= 0.0) continue;
      fs.fields.push_back({piece, false, detail::uncovered_at(piece.mid(), plus, r, 0.0)});
    }
  }
  return fs;
}

// One line of the distant case with its cached diagrams.
struct DistantLine {
  DirectedLine line;
  std::vector<int> minus_ids, plus_ids;
  std::vector<Point> minus, plus;
  std::shared_ptr<const Fpvd> fm;
  double med_minus = 0.0;
  struct IdsHash {
    std::size_t operator()(const std::vector<int>& v) const {
      std::uint64_t h = 0xcbf29ce484222325ull;
      for (int k : v) h = (h ^ std::uint64_t(k)) * 0x100000001b3ull;
      return std::size_t(h);
    }
  };
  mutable std::unordered_map<std::vector<int>, std::shared_ptr<const Fpvd>, IdsHash> diagrams;
  mutable long g_evaluations = 0;

  const Fpvd& diagram(const std::vector<int>& ids) const {
    auto it = diagrams.find(ids);
    if (it != diagrams.end()) return *it->second;
    std::vector<Point> q;
    for (int k : ids) q.push_back(plus[k]);
    return *diagrams.emplace(ids, std::make_shared<const Fpvd>(build_fpvd(q))).first->second;
  }
};

inline std::optional<DistantLine> make_distant_line(const std::vector<Point>& pts, const DirectedLine& l,
                                                    double eps) {
  DistantLine d;
  d.line = l;
  for (int k = 0; k < int(pts.size()); ++k) {
    if (l.side(pts[k]) >= -eps) { d.minus_ids.push_back(k); d.minus.push_back(pts[k]); }
    else { d.plus_ids.push_back(k); d.plus.push_back(pts[k]); }
  }
  if (d.minus.empty() || d.plus.empty()) return std::nullopt;
  d.fm = std::make_shared<const Fpvd>(build_fpvd(d.minus));
  d.med_minus = d.fm->root_weight;
  return d;
}

struct FieldProbe {
  double d = kInf;           // min over fields of the distance to the hull of the uncovered points
  int field = -1;
  Point x, y;
  std::vector<int> uncovered;
};

// Minus side at radius rm, uncovered plus points at radius rp. With stop set,
// returns as soon as a field comes below it.
inline FieldProbe field_probe(const DistantLine& L, double rm, double rp, double stop = -kInf) {
  ++L.g_evaluations;
  FieldProbe out;
  if (rm < L.med_minus - 1e-12 * std::max(1.0, rm)) return out;
  const FieldSeq fs = fields_partition(*L.fm, L.plus, std::max(rm, L.med_minus));
  // neighbouring fields often share their uncovered set
  const std::vector<int>* last = nullptr;
  IntersectionHull Hp;
  for (int k = 0; k < int(fs.fields.size()); ++k) {
    const Field& f = fs.fields[k];
    double d;
    Point x = f.geom.mid(), y = x;
    if (f.uncovered.empty()) {
      d = 0.0;
    } else {
      if (!last || *last != f.uncovered) {
        Hp = intersection_hull(L.diagram(f.uncovered), rp);
        last = &f.uncovered;
      }
      if (Hp.empty()) continue;
      const Closest c = arc_hull_distance(f.geom, Hp);
      d = c.d;
      x = c.a;
      y = c.b;
    }
    if (d < out.d) {
      out.d = d;
      out.field = k;
      out.x = x;
      out.y = y;
      out.uncovered = f.uncovered;
    }
    if (out.d < stop) break;
  }
  return out;
}

enum class FTest { Smaller, Equal, Greater };

inline FTest rl_ftest(const DistantLine& L, double r, double delta, double band) {
  if (r < L.med_minus - band) return FTest::Smaller;
  const FieldProbe p = field_probe(L, r, r, delta - band);
  if (p.d < delta - band) return FTest::Greater;
  if (p.d <= delta + band) return FTest::Equal;
  return FTest::Smaller;
}

// Radii in (lo, hi) where the field structure can change.
inline std::vector<double> event_times(const DistantLine& L, double lo, double hi, double eps) {
  std::vector<double> t;
  auto keep = [&](double x) { if (x > lo && x < hi) t.push_back(x); };
  // A plus point's circle first reaches the minus hull.
  for (const Point& p : L.plus) {
    std::vector<Point> s = L.fm->sites;
    s.push_back(p);
    keep(med(s).radius);
  }
  const Fpvd& f = *L.fm;
  auto on_boundary = [&](Point c, double r) { return std::abs(f.weight(c) - r) <= 1e-9 * std::max(1.0, r); };
  for (std::size_t a = 0; a < L.plus.size(); ++a) {
    // Two cut points meet on an arc.
    for (std::size_t b = a + 1; b < L.plus.size(); ++b)
      for (const Point& s : f.sites) {
        try {
          const Point c = circumcenter(L.plus[a], L.plus[b], s);
          const double r = dist(c, s);
          if (on_boundary(c, r)) keep(r);
        } catch (const CollinearError&) {}
      }
    // A cut point passes a hull vertex.
    for (const FpvdEdge& e : f.edges) {
      try {
        const Point c = circumcenter(L.plus[a], f.sites[e.generators[0]], f.sites[e.generators[1]]);
        const double r = dist(c, L.plus[a]);
        if (on_boundary(c, r)) keep(r);
      } catch (const CollinearError&) {}
    }
  }
  std::sort(t.begin(), t.end());
  std::vector<double> out;
  for (double x : t)
    if (out.empty() || x - out.back() > eps) out.push_back(x);
  return out;
}

struct RadiusSearch {
  double r = kInf;
  bool found = false;
  bool tight = false;   // the probe at r sits on delta within the band
};

// probe(h) <= delta and probe(l) > delta; narrow [l, h] over the sorted
// candidate radii inside it. Returns a radius when one lands on delta.
template <class Probe>
std::optional<double> narrow(Probe&& probe, double& l, double& h, double delta, double band,
                             const std::vector<double>& cand) {
  std::vector<double> w;
  for (double x : cand) if (x > l && x < h) w.push_back(x);
  long a = -1, b = long(w.size());
  while (b - a > 1) {
    const long m = (a + b) / 2;
    const double g = probe(w[m]);
    if (g <= delta + band) {
      if (g >= delta - band) return w[m];
      b = m;
    } else {
      a = m;
    }
  }
  if (a >= 0) l = w[a];
  if (b < long(w.size())) h = w[b];
  return std::nullopt;
}

template <class Probe>
double bisect_feasible(Probe&& probe, double l, double h, double delta, double band) {
  for (int it = 0; it < 200 && h - l > 1e-13 * std::max(1.0, h); ++it) {
    const double m = 0.5 * (l + h);
    if (probe(m) <= delta + band) h = m; else l = m;
  }
  return h;
}

// Smallest r in [lo, hi] with probe(r) <= delta, given probe(hi) <= delta and
// probe nonincreasing.
template <class Probe>
RadiusSearch smallest_feasible(Probe&& probe, double lo, double hi, double delta, double band,
                               const std::vector<double>& cand) {
  RadiusSearch out;
  out.found = true;
  if (probe(lo) <= delta + band) { out.r = lo; return out; }
  double l = lo, h = hi;
  if (auto hit = narrow(probe, l, h, delta, band, cand)) { out.r = *hit; out.tight = true; return out; }
  out.r = bisect_feasible(probe, l, h, delta, band);
  return out;
}

struct FindRl {
  RadiusSearch search;
  FieldProbe probe;  // at the returned radius
  long events = 0;
};

// Weight window, then an event-free window, then bisection inside it.
inline std::optional<FindRl> find_rl(const DistantLine& L, double delta, const Tolerance& tol,
                                     double bound = kInf, CaseStats* st = nullptr) {
  const double band = tol.eps_eq;
  auto g = [&](double r) {
    if (st) ++st->ftests;
    return field_probe(L, r, r, delta - band).d;
  };
  const double lo = L.med_minus;
  double hi = bound;
  if (std::isfinite(hi)) {
    if (hi < lo - band || g(std::max(hi, lo)) > delta + band) return std::nullopt;
    hi = std::max(hi, lo);
  } else {
    hi = std::max(lo, 1e-3);
    int k = 0;
    while (g(hi) > delta + band) {
      if (++k > 60) return std::nullopt;
      hi *= 2.0;
    }
  }
  FindRl out;
  RadiusSearch& rs = out.search;
  rs.found = true;
  if (g(lo) <= delta + band) {
    rs.r = lo;
  } else if (std::isfinite(bound) && hi - band > lo && g(hi - band) > delta + band) {
    rs.r = hi;  // the bound is already within the band of this line's radius
  } else {
    double l = lo, h = hi;
    std::optional<double> hit = narrow(g, l, h, delta, band, sorted_vertex_weights(*L.fm, tol.eps_eq));
    if (!hit) {
      const auto ev = event_times(L, l, h, tol.eps_eq);
      out.events = long(ev.size());
      if (st) st->events += out.events;
      hit = narrow(g, l, h, delta, band, ev);
    }
    rs.r = hit ? *hit : bisect_feasible(g, l, h, delta, band);
  }
  out.probe = field_probe(L, rs.r, rs.r);
  rs.tight = std::abs(out.probe.d - delta) <= 1e-7;
  if (st && !rs.tight && rs.r > lo) ++st->jumps;
  return out;
}

// Partition from a probe witness: uncovered plus points go to the second part.
inline SplitMask probe_mask(const DistantLine& L, const FieldProbe& p, std::size_t n) {
  SplitMask m = make_mask(n);
  for (int k : p.uncovered) mask_set(m, L.plus_ids[k]);
  return m;
}

inline CaseResult distant_scaled(const std::vector<Point>& pts, double delta, int directions, const Tolerance& tol,
                                 SplitCache& cache, double bound = kInf, double companion_bound = kInf) {
  CaseResult res;
  const double eps = tol.eps_eq;
  const std::size_t n = pts.size();
  if (n < 2) return res;
  auto take = [&](const SplitMask& m) {
    const SplitRecord& rec = solve_split(pts, m, delta, tol, cache);
    ++res.stats.solves;
    if (!res.solution || better_solution(rec.sol, *res.solution, eps)) res.solution = rec.sol;
  };

  const TwoCenter tc = two_center_min_distance(pts, tol, directions);
  if (tc.center_distance <= delta + eps) {
    res.stats.early_exit = true;
    for (const SplitMask& m : tc.optimal) take(m);
    return res;
  }

  std::set<SplitMask> seen;
  struct Hit { DistantLine line; double r; SplitMask witness; };
  std::vector<Hit> hits;
  double best = bound;
  for (const DirectedLine& l : build_distant_lines(pts, directions, tol.eps_geom)) {
    ++res.stats.lines;
    auto L = make_distant_line(pts, l, tol.eps_geom);
    if (!L) continue;
    SplitMask key = make_mask(n);
    for (int k : L->plus_ids) mask_set(key, k);
    if (!seen.insert(key).second) continue;
    ++res.stats.distinct;
    auto f = find_rl(*L, delta, tol, std::isfinite(best) ? best + eps : kInf, &res.stats);
    res.stats.g_evaluations += L->g_evaluations;
    if (!f) { ++res.stats.pruned; continue; }
    best = std::min(best, f->search.r);
    SplitMask w = probe_mask(*L, f->probe, n);
    hits.push_back({std::move(*L), f->search.r, std::move(w)});
  }
  // Shrink either side at the best radius. A side whose probe is still too
  // far at the companion to beat cannot improve the answer.
  auto companion_to_beat = [&] {
    double c = bound <= best + eps ? companion_bound : kInf;
    if (res.solution && res.solution->cost <= best + eps) c = std::min(c, res.solution->companion());
    return c;
  };
  for (const Hit& h : hits) take(h.witness);
  std::set<SplitMask> shrunk;
  for (Hit& h : hits) {
    if (h.r > best + eps) continue;
    if (!shrunk.insert(h.witness).second) continue;
    const DistantLine& L = h.line;
    const double r = h.r;
    const double band = eps;
    const long before = L.g_evaluations;
    std::vector<double> wp;
    auto g_plus = [&](double rp) { return field_probe(L, r, rp, delta - band).d; };
    double c = companion_to_beat();
    if (!(c < r) || g_plus(c - eps) <= delta + band) {
      const RadiusSearch a = smallest_feasible(g_plus, 0.0, std::min(r, c), delta, band, wp);
      if (a.found) take(probe_mask(L, field_probe(L, r, a.r), n));
    } else {
      ++res.stats.pruned;
    }
    auto g_minus = [&](double rm) { return field_probe(L, rm, r, delta - band).d; };
    c = companion_to_beat();
    if (!(c < r) || (c - eps >= L.med_minus && g_minus(c - eps) <= delta + band)) {
      const RadiusSearch b = smallest_feasible(g_minus, L.med_minus, std::min(r, std::max(c, L.med_minus)), delta, band, wp);
      if (b.found) take(probe_mask(L, field_probe(L, b.r, r), n));
    } else {
      ++res.stats.pruned;
    }
    res.stats.g_evaluations += L.g_evaluations - before;
  }
  return res;
}

inline CaseResult solve_distant(std::span<const Point> points, double delta, int directions = 360,
                                const Tolerance& tol = {}) {
  auto [map, pts] = scale_to_unit_square(points);
  SplitCache cache;
  CaseResult r = distant_scaled(pts, delta * map.scale, directions, tol, cache);
  if (r.solution) {
    r.solution->d1 = map.invert(r.solution->d1);
    r.solution->d2 = map.invert(r.solution->d2);
    r.solution->cost /= map.scale;
  }
  return r;
}

}  // namespace pctc
