#pragma once

// Farthest-point Voronoi diagram of a planar set. Only convex-hull vertices
// own cells; the boundary network is a tree of segments and rays whose
// vertices are circumcenters of the farthest Delaunay triangles.

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <span>
#include <vector>

#include "geom.hpp"

namespace pctc {

struct FpvdVertex {
  Point at;
  double weight = 0.0;
  std::array<int, 3> generators{};  // indices into Fpvd::sites
};

enum class EdgeKind { Segment, Ray, Line };

// Point(t) = origin + t * dir, t in [t0, t1]; dir is unit length.
struct FpvdEdge {
  EdgeKind kind = EdgeKind::Segment;
  Point origin;
  Point dir;
  double t0 = 0.0;
  double t1 = 0.0;
  std::array<int, 2> generators{};  // the edge lies on their bisector
  std::array<int, 2> ends{-1, -1};  // vertex ids, -1 for an open end

  Point at(double t) const { return origin + dir * t; }
};

class Fpvd {
 public:
  std::vector<Point> sites;          // hull vertices in CCW order
  std::vector<int> site_index;       // site -> index in the input list
  std::vector<FpvdVertex> vertices;
  std::vector<FpvdEdge> edges;
  std::vector<std::vector<int>> cells;  // site -> incident edge ids
  Point root;
  double root_weight = 0.0;
  int input_size = 0;

  std::size_t size() const { return sites.size(); }

  // Weight of a location: distance to its farthest site.
  double weight(Point q) const {
    double w = 0.0;
    for (const Point& s : sites) w = std::max(w, dist(q, s));
    return w;
  }

  // Site owning the cell that contains q, found by a greedy walk over the
  // cell adjacency (each cell is the intersection of its bisector halfplanes).
  int locate(Point q, int start = 0) const {
    if (sites.size() <= 1) return 0;
    int cur = std::clamp(start, 0, int(sites.size()) - 1);
    double best = dist2(q, sites[cur]);
    for (std::size_t guard = 0; guard <= sites.size(); ++guard) {
      int next = -1;
      for (int e : cells[cur]) {
        const auto& g = edges[e].generators;
        const int other = g[0] == cur ? g[1] : g[0];
        const double d = dist2(q, sites[other]);
        if (d > best) { best = d; next = other; }
      }
      if (next < 0) return cur;
      cur = next;
    }
    return cur;
  }
};

namespace detail {

inline void add_edge(Fpvd& f, FpvdEdge e) {
  const int id = static_cast<int>(f.edges.size());
  f.cells[e.generators[0]].push_back(id);
  f.cells[e.generators[1]].push_back(id);
  f.edges.push_back(e);
}

// Angle at k subtended by the chord (i, j).
inline double subtended(Point i, Point k, Point j) {
  const Point a = i - k, b = j - k;
  return std::atan2(std::abs(cross(a, b)), dot(a, b));
}

}  // namespace detail

inline Fpvd build_fpvd(std::span<const Point> points, double eps = 1e-12) {
  if (points.empty()) throw GeometryError("build_fpvd of an empty set");
  Fpvd f;
  f.input_size = static_cast<int>(points.size());
  f.site_index = convex_hull_indices(points, eps);
  for (int i : f.site_index) f.sites.push_back(points[i]);
  const int h = static_cast<int>(f.sites.size());
  f.cells.assign(h, {});

  if (h == 1) {
    f.root = f.sites[0];
    f.root_weight = 0.0;
    return f;
  }
  if (h == 2) {
    const Point a = f.sites[0], b = f.sites[1];
    FpvdEdge e;
    e.kind = EdgeKind::Line;
    e.origin = midpoint(a, b);
    e.dir = unit(perp(b - a));
    e.t0 = -kInf;
    e.t1 = kInf;
    e.generators = {0, 1};
    detail::add_edge(f, e);
    f.root = e.origin;
    f.root_weight = dist(a, b) * 0.5;
    return f;
  }

  // Farthest Delaunay triangulation: for base chord (i, j) the apex over the
  // chain i+1..j-1 is the vertex seeing the chord under the smallest angle.
  struct Tri { int a, b, c; };
  std::vector<Tri> tris;
  std::vector<std::array<int, 2>> stack{{0, h - 1}};
  while (!stack.empty()) {
    auto [i, j] = stack.back();
    stack.pop_back();
    if (j - i < 2) continue;
    int best = i + 1;
    double ang = kInf;
    for (int k = i + 1; k < j; ++k) {
      const double a = detail::subtended(f.sites[i], f.sites[k], f.sites[j]);
      if (a < ang) { ang = a; best = k; }
    }
    tris.push_back({i, best, j});
    stack.push_back({i, best});
    stack.push_back({best, j});
  }

  // Edge (u, v) with u < v -> owning triangles.
  std::vector<std::array<int, 2>> owner(static_cast<std::size_t>(h) * h, {-1, -1});
  auto slot = [&](int u, int v) -> std::array<int, 2>& {
    if (u > v) std::swap(u, v);
    return owner[static_cast<std::size_t>(u) * h + v];
  };
  for (std::size_t t = 0; t < tris.size(); ++t) {
    const Tri& tr = tris[t];
    FpvdVertex v;
    try {
      v.at = circumcenter(f.sites[tr.a], f.sites[tr.b], f.sites[tr.c]);
    } catch (const CollinearError&) {
      // Near-collinear hull triple: place the vertex far along the bisector.
      v.at = midpoint(f.sites[tr.a], f.sites[tr.c]);
    }
    v.weight = std::max({dist(v.at, f.sites[tr.a]), dist(v.at, f.sites[tr.b]), dist(v.at, f.sites[tr.c])});
    v.generators = {tr.a, tr.b, tr.c};
    f.vertices.push_back(v);
    for (auto [u, w] : {std::pair{tr.a, tr.b}, std::pair{tr.b, tr.c}, std::pair{tr.a, tr.c}}) {
      auto& s = slot(u, w);
      (s[0] < 0 ? s[0] : s[1]) = static_cast<int>(t);
    }
  }
  for (int u = 0; u < h; ++u) {
    for (int w = u + 1; w < h; ++w) {
      const auto& s = owner[static_cast<std::size_t>(u) * h + w];
      if (s[0] < 0) continue;
      FpvdEdge e;
      e.generators = {u, w};
      const bool hull_edge = (w == u + 1) || (u == 0 && w == h - 1);
      if (!hull_edge) {
        const Point p = f.vertices[s[0]].at, q = f.vertices[s[1]].at;
        e.kind = EdgeKind::Segment;
        e.origin = p;
        const double len = dist(p, q);
        e.dir = len > 0.0 ? (q - p) / len : unit(perp(f.sites[w] - f.sites[u]));
        e.t0 = 0.0;
        e.t1 = len;
        e.ends = {s[0], s[1]};
      } else {
        // CCW hull edge a -> b; the cell boundary runs along the inward normal.
        const int a = (u == 0 && w == h - 1) ? w : u;
        const int b = (a == u) ? w : u;
        e.kind = EdgeKind::Ray;
        e.origin = f.vertices[s[0]].at;
        e.dir = unit(perp(f.sites[b] - f.sites[a]));
        e.t0 = 0.0;
        e.t1 = kInf;
        e.ends = {s[0], -1};
      }
      detail::add_edge(f, e);
    }
  }

  const Disk d = med(f.sites);
  f.root = d.center;
  f.root_weight = d.radius;
  return f;
}

// Rebuild from the union of both site sets. The interface matches a linear
// merge; hull sites are all that matter for the union diagram.
inline Fpvd merge_fpvd(const Fpvd& left, const Fpvd& right) {
  std::vector<Point> u;
  u.reserve(left.sites.size() + right.sites.size());
  u.insert(u.end(), left.sites.begin(), left.sites.end());
  u.insert(u.end(), right.sites.begin(), right.sites.end());
  if (u.empty()) throw GeometryError("merge of two empty diagrams");
  return build_fpvd(u);
}

inline std::vector<double> sorted_vertex_weights(const Fpvd& f, double eps_eq = 1e-9) {
  std::vector<double> w;
  w.reserve(f.vertices.size());
  for (const auto& v : f.vertices) w.push_back(v.weight);
  std::sort(w.begin(), w.end());
  std::vector<double> out;
  for (double x : w)
    if (out.empty() || x - out.back() > eps_eq * std::max(1.0, std::abs(x))) out.push_back(x);
  return out;
}

// FPVDs of every forward prefix and backward suffix of an ordered sequence.
// forward[i] holds the first i points, backward[i] the points from i on;
// index 0 of forward and index n of backward are empty (nullptr).
struct PrefixFpvds {
  std::vector<std::shared_ptr<const Fpvd>> forward;
  std::vector<std::shared_ptr<const Fpvd>> backward;

  const Fpvd* first(std::size_t i) const { return forward[i].get(); }
  const Fpvd* rest(std::size_t i) const { return backward[i].get(); }
};

inline PrefixFpvds prefix_fpvds(std::span<const Point> seq) {
  const std::size_t n = seq.size();
  PrefixFpvds out;
  out.forward.resize(n + 1);
  out.backward.resize(n + 1);
  // Incremental step: previous hull sites plus the new point.
  std::vector<Point> sites;
  for (std::size_t i = 1; i <= n; ++i) {
    sites.push_back(seq[i - 1]);
    auto f = std::make_shared<Fpvd>(build_fpvd(sites));
    sites = f->sites;
    out.forward[i] = std::move(f);
  }
  sites.clear();
  for (std::size_t i = n; i-- > 0;) {
    sites.push_back(seq[i]);
    auto f = std::make_shared<Fpvd>(build_fpvd(sites));
    sites = f->sites;
    out.backward[i] = std::move(f);
  }
  return out;
}

}  // namespace pctc
