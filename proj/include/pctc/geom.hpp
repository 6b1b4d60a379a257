#pragma once

// Planar primitives shared by every stage of the solver: points, disks,
// circumcenters, convex hulls, the minimum enclosing disk, convex polygon
// distance, unit-square normalisation and the general-position policy.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pctc {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Point {
  double x = 0.0;
  double y = 0.0;

  constexpr Point() = default;
  constexpr Point(double xx, double yy) : x(xx), y(yy) {}

  constexpr Point operator+(Point o) const { return {x + o.x, y + o.y}; }
  constexpr Point operator-(Point o) const { return {x - o.x, y - o.y}; }
  constexpr Point operator-() const { return {-x, -y}; }
  constexpr Point operator*(double s) const { return {x * s, y * s}; }
  constexpr Point operator/(double s) const { return {x / s, y / s}; }
  Point& operator+=(Point o) { x += o.x; y += o.y; return *this; }
  Point& operator-=(Point o) { x -= o.x; y -= o.y; return *this; }
  constexpr bool operator==(const Point&) const = default;
};

inline constexpr Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

inline constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline constexpr double norm2(Point a) { return dot(a, a); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline constexpr double dist2(Point a, Point b) { return norm2(a - b); }
inline constexpr Point perp(Point a) { return {-a.y, a.x}; }  // left normal
inline Point unit(Point a) {
  const double n = norm(a);
  return n > 0.0 ? a / n : Point{0.0, 0.0};
}
inline Point unit_from_angle(double theta) { return {std::cos(theta), std::sin(theta)}; }
inline double angle_of(Point a) { return std::atan2(a.y, a.x); }
inline constexpr Point midpoint(Point a, Point b) { return {(a.x + b.x) * 0.5, (a.y + b.y) * 0.5}; }
inline constexpr bool lex_less(Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

// Signed orientation of (a, b, c), snapped to zero inside a relative band.
inline int orientation(Point a, Point b, Point c, double eps) {
  const double v = cross(b - a, c - a);
  const double scale = std::max({norm2(b - a), norm2(c - a), 1e-300});
  if (std::abs(v) <= eps * scale) return 0;
  return v > 0.0 ? 1 : -1;
}

// Normalise an angle into [0, 2*pi).
inline double wrap_two_pi(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a < 0.0) a += 2.0 * kPi;
  if (a >= 2.0 * kPi) a -= 2.0 * kPi;
  return a;
}

struct Disk {
  Point center;
  double radius = 0.0;

  bool covers(Point p, double eps = 0.0) const { return dist(center, p) <= radius + eps; }
};

struct Tolerance {
  double eps_geom = 1e-10;  // predicate band, relative to unit extent
  double eps_opt = 1e-10;   // convergence target of numeric searches
  double eps_eq = 1e-9;     // equality band for costs and radii

  bool valid() const {
    return 0.0 < eps_geom && eps_geom <= eps_opt && eps_opt <= eps_eq && eps_eq < 1.0;
  }
};

struct DirectedLine {
  Point anchor;
  Point direction{1.0, 0.0};

  static DirectedLine from_angle(Point anchor, double theta) {
    return {anchor, unit_from_angle(theta)};
  }
  // > 0 left of the line, < 0 right of it.
  double side(Point p) const { return cross(direction, p - anchor); }
  // Coordinate of p along the direction, measured from the anchor.
  double along(Point p) const { return dot(direction, p - anchor); }
};

struct Instance {
  std::vector<Point> points;
  double delta = 0.0;
  bool perturbed = false;  // general-position jitter was applied on load
};

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CollinearError : public GeometryError {
 public:
  CollinearError() : GeometryError("collinear points admit no circumcenter") {}
};

inline Point circumcenter(Point a, Point b, Point c) {
  const Point ab = b - a;
  const Point ac = c - a;
  const double d = 2.0 * cross(ab, ac);
  const double scale = std::max(norm2(ab), norm2(ac));
  if (scale == 0.0 || std::abs(d) <= 1e-14 * scale) throw CollinearError();
  const double b2 = norm2(ab);
  const double c2 = norm2(ac);
  return a + Point{(ac.y * b2 - ab.y * c2) / d, (ab.x * c2 - ac.x * b2) / d};
}

inline double circumradius(Point a, Point b, Point c) { return dist(circumcenter(a, b, c), a); }

namespace detail {

inline Disk disk_from_two(Point a, Point b) { return {midpoint(a, b), dist(a, b) * 0.5}; }

inline Disk disk_from_three(Point a, Point b, Point c) {
  try {
    const Point o = circumcenter(a, b, c);
    return {o, std::max({dist(o, a), dist(o, b), dist(o, c)})};
  } catch (const CollinearError&) {
    Disk best = disk_from_two(a, b);
    for (const Disk& d : {disk_from_two(a, c), disk_from_two(b, c)})
      if (d.radius > best.radius) best = d;
    return best;
  }
}

inline bool outside(const Disk& d, Point p) {
  return dist(d.center, p) > d.radius * (1.0 + 1e-14) + 1e-15;
}

}  // namespace detail

inline constexpr std::uint64_t kDefaultSeed = 0x5eed5eedULL;

// Minimum enclosing disk by randomized incremental move-to-front.
inline Disk med(std::span<const Point> points, std::uint64_t seed = kDefaultSeed) {
  if (points.empty()) throw GeometryError("med of an empty point set");
  std::vector<Point> p(points.begin(), points.end());
  std::mt19937_64 rng(seed);
  std::shuffle(p.begin(), p.end(), rng);
  Disk d{p[0], 0.0};
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (!detail::outside(d, p[i])) continue;
    d = {p[i], 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      if (!detail::outside(d, p[j])) continue;
      d = detail::disk_from_two(p[i], p[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (!detail::outside(d, p[k])) continue;
        d = detail::disk_from_three(p[i], p[j], p[k]);
      }
    }
  }
  double r = 0.0;
  for (const Point& q : p) r = std::max(r, dist(d.center, q));
  d.radius = r;
  return d;
}

// Points lying on the boundary of d within a relative band.
inline std::vector<int> boundary_points(std::span<const Point> points, const Disk& d, double eps) {
  std::vector<int> out;
  const double band = eps * std::max(1.0, d.radius);
  for (std::size_t i = 0; i < points.size(); ++i)
    if (std::abs(dist(points[i], d.center) - d.radius) <= band) out.push_back(static_cast<int>(i));
  return out;
}

// Indices of the extreme points, counter-clockwise from the lexicographic
// minimum. Collinear input yields the two extremes, coincident input one index.
inline std::vector<int> convex_hull_indices(std::span<const Point> points, double eps = 1e-12) {
  const int n = static_cast<int>(points.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return lex_less(points[a], points[b]) || (points[a] == points[b] && a < b);
  });
  idx.erase(std::unique(idx.begin(), idx.end(), [&](int a, int b) { return points[a] == points[b]; }),
            idx.end());
  if (idx.size() <= 2) return idx;
  std::vector<int> hull(2 * idx.size());
  int k = 0;
  auto keep = [&](int a, int b, int c) { return orientation(points[a], points[b], points[c], eps) > 0; };
  for (int i : idx) {
    while (k >= 2 && !keep(hull[k - 2], hull[k - 1], i)) --k;
    hull[k++] = i;
  }
  for (int t = static_cast<int>(idx.size()) - 2, lo = k + 1; t >= 0; --t) {
    const int i = idx[t];
    while (k >= lo && !keep(hull[k - 2], hull[k - 1], i)) --k;
    hull[k++] = i;
  }
  hull.resize(k - 1);
  if (hull.size() == 1 && idx.size() > 1) hull.push_back(idx.back());
  return hull;
}

inline std::vector<Point> convex_hull(std::span<const Point> points, double eps = 1e-12) {
  std::vector<Point> out;
  for (int i : convex_hull_indices(points, eps)) out.push_back(points[i]);
  return out;
}

struct ConvexDistance {
  double distance = 0.0;
  Point on_a;
  Point on_b;
};

namespace detail {

inline Point closest_on_segment(Point p, Point a, Point b, double* t_out = nullptr) {
  const Point ab = b - a;
  const double len2 = norm2(ab);
  double t = len2 > 0.0 ? std::clamp(dot(p - a, ab) / len2, 0.0, 1.0) : 0.0;
  if (t_out) *t_out = t;
  return a + ab * t;
}

inline bool segments_intersect(Point a, Point b, Point c, Point d, Point* at) {
  const Point r = b - a;
  const Point s = d - c;
  const double den = cross(r, s);
  if (den == 0.0) return false;
  const double t = cross(c - a, s) / den;
  const double u = cross(c - a, r) / den;
  if (t < 0.0 || t > 1.0 || u < 0.0 || u > 1.0) return false;
  *at = a + r * t;
  return true;
}

// Rotate a convex CCW chain so it starts at its lowest (then leftmost) vertex.
inline std::vector<Point> from_lowest(std::span<const Point> c) {
  std::vector<Point> v(c.begin(), c.end());
  if (v.empty()) return v;
  auto low = std::min_element(v.begin(), v.end(), [](Point a, Point b) {
    return a.y < b.y || (a.y == b.y && a.x < b.x);
  });
  std::rotate(v.begin(), low, v.end());
  return v;
}

inline bool inside_convex(std::span<const Point> poly, Point p) {
  const std::size_t n = poly.size();
  if (n == 0) return false;
  if (n == 1) return poly[0] == p;
  double scale = 0.0;
  for (const Point& q : poly) scale = std::max(scale, norm2(q - poly[0]));
  const double band = 1e-12 * std::max(scale, 1e-300);
  if (n == 2) {
    Point c = closest_on_segment(p, poly[0], poly[1]);
    return dist2(c, p) <= band;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (cross(poly[(i + 1) % n] - poly[i], p - poly[i]) < -band) return false;
  return true;
}

}  // namespace detail

namespace detail {

// Point in convex CCW polygon by binary search over the fan from vertex 0.
inline bool inside_convex_fast(std::span<const Point> poly, Point p, double band) {
  const std::size_t n = poly.size();
  if (n < 3) return inside_convex(poly, p);
  const Point o = poly[0];
  if (cross(poly[1] - o, p - o) < -band || cross(poly[n - 1] - o, p - o) > band) return false;
  std::size_t lo = 1, hi = n - 1;
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (cross(poly[mid] - o, p - o) >= 0.0) lo = mid; else hi = mid;
  }
  return cross(poly[hi] - poly[lo], p - poly[lo]) >= -band;
}

}  // namespace detail

// Distance between two convex CCW chains (1 or 2 points allowed) through the
// Minkowski difference A + (-B), merged edge by edge in one rotating pass.
inline ConvexDistance convex_distance(std::span<const Point> a_in, std::span<const Point> b_in) {
  if (a_in.empty() || b_in.empty()) throw GeometryError("convex_distance of an empty chain");
  const std::vector<Point> a = detail::from_lowest(a_in);
  std::vector<Point> nb;
  nb.reserve(b_in.size());
  for (const Point& q : b_in) nb.push_back(-q);
  nb = detail::from_lowest(nb);
  const std::size_t na = a.size(), nn = nb.size();

  struct Vtx { Point p; std::size_t ia, ib; };
  std::vector<Vtx> d;
  d.reserve(na + nn + 1);
  const std::size_t ea = na > 1 ? na : 0, eb = nn > 1 ? nn : 0;
  std::size_t i = 0, j = 0;
  d.push_back({a[0] + nb[0], 0, 0});
  while (i < ea || j < eb) {
    int step;
    if (i >= ea) step = -1;
    else if (j >= eb) step = 1;
    else {
      const double c = cross(a[(i + 1) % na] - a[i], nb[(j + 1) % nn] - nb[j]);
      step = c > 0.0 ? 1 : (c < 0.0 ? -1 : 0);
    }
    if (step >= 0) ++i;
    if (step <= 0) ++j;
    if (i >= ea && j >= eb) break;
    d.push_back({a[i % na] + nb[j % nn], i % na, j % nn});
  }

  std::vector<Point> poly;
  poly.reserve(d.size());
  double scale = 0.0;
  for (const Vtx& v : d) {
    poly.push_back(v.p);
    scale = std::max(scale, norm2(v.p - d[0].p));
  }
  const double band = 1e-12 * std::max(scale, 1e-300);
  const Point origin{0.0, 0.0};
  const bool overlap = poly.size() >= 3 ? detail::inside_convex_fast(poly, origin, band)
                                        : detail::inside_convex(poly, origin);
  if (overlap) {
    // Report a common point.
    const double ba = 1e-12 * std::max(1.0, scale);
    for (const Point& p : a)
      if (detail::inside_convex_fast(b_in, p, ba)) return {0.0, p, p};
    for (const Point& q : b_in)
      if (detail::inside_convex_fast(a, q, ba)) return {0.0, q, q};
    for (std::size_t s = 0; s < na; ++s)
      for (std::size_t t = 0; t < b_in.size(); ++t) {
        Point at;
        if (detail::segments_intersect(a[s], a[(s + 1) % na], b_in[t], b_in[(t + 1) % b_in.size()], &at))
          return {0.0, at, at};
      }
    return {0.0, a[0], a[0]};
  }
  ConvexDistance best{kInf, {}, {}};
  const std::size_t m = d.size();
  for (std::size_t s = 0; s < m; ++s) {
    const Vtx& v = d[s];
    const Vtx& w = d[(s + 1) % m];
    double t = 0.0;
    const Point c = detail::closest_on_segment(origin, v.p, w.p, &t);
    const double dd = norm(c);
    if (dd < best.distance) {
      const Point pa = a[v.ia] + (a[w.ia] - a[v.ia]) * t;
      const Point pb = -(nb[v.ib] + (nb[w.ib] - nb[v.ib]) * t);
      best = {dd, pa, pb};
    }
    if (m == 1) break;
  }
  return best;
}

// Uniform scale plus translation taking the input into [0,1]^2.
struct AffineMap {
  double scale = 1.0;
  Point offset;  // image = (p - offset) * scale
  bool degenerate = false;

  Point apply(Point p) const { return (p - offset) * scale; }
  Point invert(Point q) const { return q / scale + offset; }
  Disk apply(const Disk& d) const { return {apply(d.center), d.radius * scale}; }
  Disk invert(const Disk& d) const { return {invert(d.center), d.radius / scale}; }
};

inline std::pair<AffineMap, std::vector<Point>> scale_to_unit_square(std::span<const Point> points) {
  if (points.empty()) throw GeometryError("scale_to_unit_square of an empty set");
  double lx = kInf, ly = kInf, hx = -kInf, hy = -kInf;
  for (const Point& p : points) {
    lx = std::min(lx, p.x); ly = std::min(ly, p.y);
    hx = std::max(hx, p.x); hy = std::max(hy, p.y);
  }
  AffineMap map;
  map.offset = {lx, ly};
  const double extent = std::max(hx - lx, hy - ly);
  if (extent > 0.0) {
    map.scale = 1.0 / extent;
  } else {
    map.degenerate = true;  // DegenerateExtent: translation only
  }
  std::vector<Point> out;
  out.reserve(points.size());
  for (const Point& p : points) out.push_back(map.apply(p));
  return {map, out};
}

inline double diameter(std::span<const Point> points) {
  double d = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) d = std::max(d, dist(points[i], points[j]));
  return d;
}

// General-position policy: coincident pairs and cocircular quadruples get a
// deterministic jitter of size eps * extent. Returns true when jitter applied.
inline bool enforce_general_position(std::vector<Point>& points, double eps = 1e-9,
                                     double detect = 1e-9) {
  const std::size_t n = points.size();
  if (n < 2) return false;
  double lx = kInf, ly = kInf, hx = -kInf, hy = -kInf;
  for (const Point& p : points) {
    lx = std::min(lx, p.x); ly = std::min(ly, p.y);
    hx = std::max(hx, p.x); hy = std::max(hy, p.y);
  }
  const double extent = std::max({hx - lx, hy - ly, 1e-300});
  std::vector<char> flag(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (dist(points[i], points[j]) <= detect * extent) flag[i] = flag[j] = 1;
  if (n >= 4 && n <= 160) {
    // Bucket circumcircles by quantised centre and radius.
    const double q = std::max(detect, 1e-12) * extent * 16.0;
    struct Key { long long cx, cy, r; bool operator==(const Key&) const = default; };
    struct KeyHash {
      std::size_t operator()(const Key& k) const {
        return std::hash<long long>()(k.cx * 73856093LL ^ k.cy * 19349663LL ^ k.r * 83492791LL);
      }
    };
    std::unordered_map<Key, std::vector<std::array<int, 3>>, KeyHash> buckets;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          Point c;
          try { c = circumcenter(points[i], points[j], points[k]); } catch (const CollinearError&) { continue; }
          const double r = dist(c, points[i]);
          if (!std::isfinite(r) || r > 1e6 * extent) continue;
          Key key{std::llround(c.x / q), std::llround(c.y / q), std::llround(r / q)};
          buckets[key].push_back({int(i), int(j), int(k)});
        }
    for (auto& [key, tris] : buckets) {
      if (tris.size() < 2) continue;
      std::vector<int> members;
      for (auto& t : tris) members.insert(members.end(), t.begin(), t.end());
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      if (members.size() < 4) continue;
      // Confirm against a common circle.
      const auto& t0 = tris.front();
      const Point c = circumcenter(points[t0[0]], points[t0[1]], points[t0[2]]);
      const double r = dist(c, points[t0[0]]);
      int on = 0;
      for (int m : members) on += std::abs(dist(points[m], c) - r) <= detect * extent;
      if (on >= 4)
        for (int m : members) flag[m] = 1;
    }
  }
  bool any = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!flag[i]) continue;
    any = true;
    std::uint64_t h = (i + 1) * 0x9E3779B97F4A7C15ULL;
    h ^= h >> 31; h *= 0xBF58476D1CE4E5B9ULL; h ^= h >> 27;
    const double theta = double(h % 1000003) / 1000003.0 * 2.0 * kPi;
    const double mag = 0.5 + 0.5 * double((h >> 20) % 1000) / 1000.0;
    points[i] += unit_from_angle(theta) * (eps * extent * mag);
  }
  return any;
}

}  // namespace pctc
