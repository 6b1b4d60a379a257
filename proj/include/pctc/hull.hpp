#pragma once

// Intersection hulls H(r) = intersection of disk(site, r) over the sites of
// a farthest-point Voronoi diagram. Arcs are kept exactly; vertices sit on
// diagram edges at weight r.

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "arcs.hpp"
#include "fpvd.hpp"
#include "geom.hpp"

namespace pctc {

enum class HullShape { Empty, Point, Disk, Region };

// Where a hull vertex lives on the diagram: edge id and quadratic root sign.
struct EdgeSlot {
  int edge = -1;
  int sign = 1;
};

struct HullArc {
  int site = -1;   // -1 for the degenerate arc of a point hull
  ArcGeom geom;    // counter-clockwise parametrisation
  Point start;     // clockwise traversal goes start -> end
  Point end;
  EdgeSlot from;   // slot of geom.first()  (== end)
  EdgeSlot to;     // slot of geom.last()   (== start)
};

struct Arm {
  Point from;
  Point dir;
  int vertex = -1;  // index k: the vertex arcs[k].start
};

struct IntersectionHull {
  double radius = 0.0;
  HullShape shape = HullShape::Empty;
  std::vector<Point> sites;
  Point root;
  std::vector<HullArc> arcs;  // clockwise from the leftmost endpoint
  std::vector<Arm> arms;

  bool empty() const { return shape == HullShape::Empty; }

  bool contains(Point p, double eps = 1e-12) const {
    if (empty()) return false;
    const double band = eps * std::max(1.0, radius);
    for (const Point& s : sites)
      if (dist(p, s) > radius + band) return false;
    return true;
  }

  Point representative() const {
    if (shape == HullShape::Point) return root;
    return arcs.front().start;
  }

  std::vector<int> site_sequence() const {
    std::vector<int> out;
    for (const auto& a : arcs) out.push_back(a.site);
    return out;
  }

  const HullArc* arc_of_site(int s) const {
    for (const auto& a : arcs)
      if (a.site == s) return &a;
    return nullptr;
  }

  // Points on the boundary, spread proportionally to arc length.
  std::vector<Point> boundary_samples(int count) const {
    std::vector<Point> out;
    if (empty() || count <= 0) return out;
    if (shape == HullShape::Point) return std::vector<Point>(count, root);
    double total = 0.0;
    for (const auto& a : arcs) total += a.geom.span;
    for (int i = 0; i < count; ++i) {
      double u = total * (double(i) + 0.5) / count;
      for (const auto& a : arcs) {
        if (u <= a.geom.span || &a == &arcs.back()) {
          out.push_back(a.geom.at_angle(a.geom.lo + std::min(u, a.geom.span)));
          break;
        }
        u -= a.geom.span;
      }
    }
    return out;
  }
};

namespace detail {

inline bool edge_root(const Fpvd& f, const FpvdEdge& e, int sign, double r, double* t_out, bool clamp) {
  const Point w = e.origin - f.sites[e.generators[0]];
  const double b = dot(e.dir, w);
  const double c = norm2(w) - r * r;
  double disc = b * b - c;
  if (disc < 0.0) {
    if (!clamp) return false;
    disc = 0.0;
  }
  double t = -b + sign * std::sqrt(disc);
  const double slack = 1e-12 * std::max({1.0, std::abs(t), r});
  if (!clamp && (t < e.t0 - slack || t > e.t1 + slack)) return false;
  t = std::clamp(t, e.t0, e.t1);
  *t_out = t;
  return true;
}

}  // namespace detail

// Location of a tracked vertex at another radius inside a stable window.
inline Point slot_at(const Fpvd& f, EdgeSlot s, double r) {
  const FpvdEdge& e = f.edges[s.edge];
  double t = 0.0;
  detail::edge_root(f, e, s.sign, r, &t, true);
  return e.at(t);
}

inline IntersectionHull intersection_hull(const Fpvd& f, double r) {
  if (f.sites.empty()) throw GeometryError("intersection hull of an empty diagram");
  IntersectionHull H;
  H.radius = r;
  H.sites = f.sites;
  H.root = f.root;
  const int h = static_cast<int>(f.sites.size());
  const double band = 1e-12 * std::max(1.0, r);

  if (r < f.root_weight - band) return H;  // empty
  if (h == 1) {
    if (r <= band) {
      H.shape = HullShape::Point;
      H.arcs.push_back({-1, ArcGeom::point(H.root), H.root, H.root, {}, {}});
      return H;
    }
    H.shape = HullShape::Disk;
    HullArc a;
    a.site = 0;
    a.geom = {f.sites[0], r, kPi, 2.0 * kPi};
    a.start = a.end = a.geom.first();
    H.arcs.push_back(a);
    return H;
  }
  auto point_hull = [&] {
    H.shape = HullShape::Point;
    H.arcs.assign(1, {-1, ArcGeom::point(H.root), H.root, H.root, {}, {}});
    return H;
  };
  if (r <= f.root_weight + band) return point_hull();

  struct Crossing {
    Point p;
    double ang;
    EdgeSlot slot;
    int gens[3];
    int ng;
  };
  std::vector<Crossing> cr;
  for (std::size_t e = 0; e < f.edges.size(); ++e) {
    const FpvdEdge& ed = f.edges[e];
    for (int sign : {-1, 1}) {
      double t = 0.0;
      if (!detail::edge_root(f, ed, sign, r, &t, false)) continue;
      Crossing c;
      c.p = ed.at(t);
      c.ang = angle_of(c.p - f.root);
      c.slot = {static_cast<int>(e), sign};
      c.gens[0] = ed.generators[0];
      c.gens[1] = ed.generators[1];
      c.ng = 2;
      cr.push_back(c);
    }
  }
  std::sort(cr.begin(), cr.end(), [](const Crossing& a, const Crossing& b) { return a.ang < b.ang; });
  // Merge crossings that coincide (radius at a diagram vertex, or a double root).
  std::vector<Crossing> m;
  const double same = 1e-11 * std::max(1.0, r);
  for (const Crossing& c : cr) {
    Crossing* hit = nullptr;
    if (!m.empty() && dist(m.back().p, c.p) <= same) hit = &m.back();
    else if (!m.empty() && dist(m.front().p, c.p) <= same) hit = &m.front();
    if (!hit) { m.push_back(c); continue; }
    for (int g = 0; g < c.ng; ++g) {
      bool have = false;
      for (int k = 0; k < hit->ng; ++k) have |= hit->gens[k] == c.gens[g];
      if (!have && hit->ng < 3) hit->gens[hit->ng++] = c.gens[g];
    }
  }
  if (m.size() < 2) return point_hull();

  auto weight = [&](Point q) {
    double w = 0.0;
    for (const Point& s : f.sites) w = std::max(w, dist(q, s));
    return w;
  };

  const std::size_t k = m.size();
  std::vector<HullArc> ccw;
  ccw.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Crossing& a = m[i];
    const Crossing& b = m[(i + 1) % k];
    std::vector<int> common, all;
    for (int x = 0; x < a.ng; ++x) {
      all.push_back(a.gens[x]);
      for (int y = 0; y < b.ng; ++y)
        if (a.gens[x] == b.gens[y]) common.push_back(a.gens[x]);
    }
    for (int y = 0; y < b.ng; ++y) all.push_back(b.gens[y]);
    int site = common.size() == 1 ? common[0] : -1;
    if (site < 0) {
      const auto& cand = common.empty() ? all : common;
      double best = kInf;
      for (int s : cand) {
        const ArcGeom g = ArcGeom::ccw(f.sites[s], r, a.p, b.p);
        const double w = weight(g.mid());
        if (w < best) { best = w; site = s; }
      }
    }
    HullArc arc;
    arc.site = site;
    arc.geom = ArcGeom::ccw(f.sites[site], r, a.p, b.p);
    arc.start = b.p;
    arc.end = a.p;
    arc.from = a.slot;
    arc.to = b.slot;
    ccw.push_back(arc);
  }
  // Clockwise order, starting at the leftmost endpoint.
  std::reverse(ccw.begin(), ccw.end());
  std::size_t first = 0;
  for (std::size_t i = 1; i < ccw.size(); ++i)
    if (lex_less(ccw[i].start, ccw[first].start)) first = i;
  std::rotate(ccw.begin(), ccw.begin() + static_cast<long>(first), ccw.end());
  H.arcs = std::move(ccw);
  H.shape = HullShape::Region;

  const std::size_t na = H.arcs.size();
  for (std::size_t i = 0; i < na; ++i) {
    const HullArc& next = H.arcs[i];
    const HullArc& prev = H.arcs[(i + na - 1) % na];
    const Point v = next.start;
    Point d = (v - f.sites[prev.site]) + (v - f.sites[next.site]);
    if (norm(d) <= 1e-14 * std::max(1.0, r)) d = f.edges[next.to.edge].dir;
    H.arms.push_back({v, unit(d), static_cast<int>(i)});
  }
  return H;
}

// ---- distances -------------------------------------------------------------

inline Closest hull_distance(const IntersectionHull& A, const IntersectionHull& B, double eps = 1e-12) {
  Closest best;
  if (A.empty() || B.empty()) return best;
  const Point ra = A.representative();
  if (B.contains(ra, eps)) { best.take(0.0, ra, ra); return best; }
  const Point rb = B.representative();
  if (A.contains(rb, eps)) { best.take(0.0, rb, rb); return best; }
  for (const auto& a : A.arcs)
    for (const auto& b : B.arcs) {
      const Closest c = arc_arc(a.geom, b.geom);
      best.take(c.d, c.a, c.b);
      if (best.d == 0.0) return best;
    }
  return best;
}

// Distance from an arc (a curve, not a region) to a hull.
inline Closest arc_hull_distance(const ArcGeom& g, const IntersectionHull& B, double eps = 1e-12) {
  Closest best;
  if (B.empty()) return best;
  const Point m = g.mid();
  if (B.contains(m, eps)) { best.take(0.0, m, m); return best; }
  for (const auto& b : B.arcs) {
    const Closest c = arc_arc(g, b.geom);
    best.take(c.d, c.a, c.b);
    if (best.d == 0.0) break;
  }
  return best;
}

// ---- arms against a second hull --------------------------------------------

struct ArmHit {
  Point at;
  int arm = -1;
  int arc = -1;  // arc index of the hit hull
  double t = 0.0;
  bool first = false;
};

// Every crossing of every arm with the boundary of h2, flagged first-or-not.
inline std::vector<ArmHit> arm_crossings(const std::vector<Arm>& arms, const IntersectionHull& h2) {
  std::vector<ArmHit> out;
  if (h2.empty() || h2.shape == HullShape::Point) return out;
  for (std::size_t a = 0; a < arms.size(); ++a) {
    const Arm& arm = arms[a];
    const std::size_t begin = out.size();
    for (std::size_t j = 0; j < h2.arcs.size(); ++j) {
      const ArcGeom& g = h2.arcs[j].geom;
      const Point w = arm.from - g.c;
      const double b = dot(arm.dir, w);
      const double c = norm2(w) - g.R * g.R;
      const double disc = b * b - c;
      if (disc < 0.0) continue;
      const double s = std::sqrt(disc);
      for (double t : {-b - s, -b + s}) {
        if (t < 0.0) continue;
        const Point p = arm.from + arm.dir * t;
        if (!g.holds_angle(angle_of(p - g.c), 1e-12)) continue;
        out.push_back({p, static_cast<int>(a), static_cast<int>(j), t, false});
      }
    }
    if (out.size() > begin && !h2.contains(arm.from)) {
      auto it = std::min_element(out.begin() + static_cast<long>(begin), out.end(),
                                 [](const ArmHit& x, const ArmHit& y) { return x.t < y.t; });
      it->first = true;
    }
  }
  return out;
}

// The first intersection point of each arm with h2 (set B).
inline std::vector<ArmHit> first_intersections(const std::vector<Arm>& arms, const IntersectionHull& h2) {
  std::vector<ArmHit> out;
  for (const ArmHit& h : arm_crossings(arms, h2))
    if (h.first) out.push_back(h);
  return out;
}

struct MiniArc {
  int x_label = -1;  // arc index of h1 whose arm region holds the piece
  int y_label = -1;  // arc index of h2 hosting the piece
  int x_site = -1;
  int y_site = -1;
  ArcGeom piece;
};

// Arc of h1 nearest to y; with arms as region borders this is the region label.
inline int region_label(const IntersectionHull& h1, Point y) {
  int best = 0;
  double bd = kInf;
  for (std::size_t k = 0; k < h1.arcs.size(); ++k) {
    const double d = point_arc(y, h1.arcs[k].geom).d;
    if (d < bd - 1e-15) { bd = d; best = static_cast<int>(k); }
  }
  return best;
}

inline std::vector<MiniArc> mini_arcs(const IntersectionHull& h1, const IntersectionHull& h2) {
  std::vector<MiniArc> out;
  if (h1.empty() || h2.empty()) return out;
  auto site_of = [&](int k) { return h1.arcs.empty() ? -1 : h1.arcs[k].site; };
  if (h2.shape == HullShape::Point) {
    const int x = region_label(h1, h2.root);
    out.push_back({x, 0, site_of(x), -1, ArcGeom::point(h2.root)});
    return out;
  }
  const auto hits = arm_crossings(h1.arms, h2);
  for (std::size_t j = 0; j < h2.arcs.size(); ++j) {
    const ArcGeom& g = h2.arcs[j].geom;
    std::vector<double> cuts{0.0, g.span};
    for (const ArmHit& hit : hits) {
      if (hit.arc != static_cast<int>(j)) continue;
      double s = wrap_two_pi(angle_of(hit.at - g.c) - g.lo);
      if (s > g.span) s = (s - g.span < 2.0 * kPi - s) ? g.span : 0.0;
      cuts.push_back(s);
    }
    std::sort(cuts.begin(), cuts.end());
    // Walk clockwise: from the top of the range down.
    for (std::size_t c = cuts.size() - 1; c > 0; --c) {
      const double a = cuts[c - 1], b = cuts[c];
      if (b - a <= 1e-14) continue;
      ArcGeom piece{g.c, g.R, g.lo + a, b - a};
      const int x = region_label(h1, piece.mid());
      if (!out.empty() && out.back().y_label == static_cast<int>(j) && out.back().x_label == x) {
        // Extend the previous piece downward.
        out.back().piece.span += out.back().piece.lo - piece.lo;
        out.back().piece.lo = piece.lo;
        continue;
      }
      out.push_back({x, static_cast<int>(j), site_of(x), h2.arcs[j].site, piece});
    }
  }
  return out;
}

// ---- contact radius between two tracked arcs ---------------------------------

// An arc followed across radii inside a stable window, or frozen.
struct ArcTrack {
  const Fpvd* f = nullptr;
  HullShape shape = HullShape::Region;
  int site = -1;
  EdgeSlot from, to;
  bool frozen = false;
  ArcGeom fixed;

  static ArcTrack of(const Fpvd& f, const IntersectionHull& H, const HullArc& a) {
    ArcTrack t;
    t.f = &f;
    t.shape = H.shape;
    t.site = a.site;
    t.from = a.from;
    t.to = a.to;
    t.fixed = a.geom;
    return t;
  }
  static ArcTrack freeze(const ArcGeom& g) {
    ArcTrack t;
    t.frozen = true;
    t.fixed = g;
    return t;
  }

  ArcGeom at(double r) const {
    if (frozen || shape == HullShape::Point) return fixed;
    const Point c = f->sites[site];
    if (shape == HullShape::Disk) return {c, r, kPi, 2.0 * kPi};
    return ArcGeom::ccw(c, r, slot_at(*f, from, r), slot_at(*f, to, r));
  }
};

// Smallest r in [lo, hi] with dist(x(r), y(r)) <= delta, by scan then bisection.
inline std::optional<double> arc_contact_radius(const ArcTrack& x, const ArcTrack& y, double delta, double lo,
                                                double hi, int samples = 16) {
  auto g = [&](double r) { return arc_arc(x.at(r), y.at(r)).d - delta; };
  if (g(lo) <= 0.0) return lo;
  double prev = lo;
  for (int k = 1; k <= samples; ++k) {
    const double r = (k == samples) ? hi : lo + (hi - lo) * k / samples;
    if (g(r) <= 0.0) {
      double a = prev, b = r;
      for (int it = 0; it < 200 && b - a > 2e-16 * std::max(1.0, b); ++it) {
        const double mid = 0.5 * (a + b);
        if (g(mid) <= 0.0) b = mid; else a = mid;
      }
      return b;
    }
    prev = r;
  }
  return std::nullopt;
}

}  // namespace pctc
