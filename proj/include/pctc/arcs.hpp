#pragma once

// Circular arcs and the closest-pair primitives between them.
// An arc covers angles lo .. lo+span counter-clockwise around c.
// Radius 0 with a full span doubles as a plain point.

#include <algorithm>
#include <cmath>
#include <optional>

#include "geom.hpp"

namespace pctc {

struct ArcGeom {
  Point c;
  double R = 0.0;
  double lo = 0.0;
  double span = 2.0 * kPi;

  bool full() const { return span >= 2.0 * kPi - 1e-15; }
  Point at_angle(double th) const { return c + unit_from_angle(th) * R; }
  Point first() const { return at_angle(lo); }
  Point last() const { return at_angle(lo + span); }
  Point mid() const { return at_angle(lo + span * 0.5); }

  bool holds_angle(double th, double tol = 1e-11) const {
    if (full()) return true;
    const double d = wrap_two_pi(th - lo);
    return d <= span + tol || d >= 2.0 * kPi - tol;
  }

  static ArcGeom point(Point p) { return {p, 0.0, 0.0, 2.0 * kPi}; }
  // Arc from a to b counter-clockwise around c (both assumed on the circle).
  static ArcGeom ccw(Point c, double R, Point a, Point b) {
    const double l = angle_of(a - c);
    double s = wrap_two_pi(angle_of(b - c) - l);
    return {c, R, l, s};
  }
};

struct Closest {
  double d = kInf;
  Point a;  // on the first object
  Point b;  // on the second object

  void take(double dd, Point pa, Point pb) {
    if (dd < d) { d = dd; a = pa; b = pb; }
  }
  Closest swapped() const { return {d, b, a}; }
};

inline Closest point_arc(Point p, const ArcGeom& g) {
  Closest out;
  if (g.R == 0.0) {
    out.take(dist(p, g.c), p, g.c);
    return out;
  }
  const Point v = p - g.c;
  const double len = norm(v);
  if (len == 0.0) {
    out.take(g.R, p, g.first());
    return out;
  }
  const double th = angle_of(v);
  if (g.holds_angle(th, 0.0)) {
    const Point q = g.c + v * (g.R / len);
    out.take(std::abs(len - g.R), p, q);
  }
  if (!g.full()) {
    out.take(dist(p, g.first()), p, g.first());
    out.take(dist(p, g.last()), p, g.last());
  }
  return out;
}

// Intersection points of two circles, if any.
inline int circle_circle(Point c1, double r1, Point c2, double r2, Point out[2]) {
  const Point dv = c2 - c1;
  const double d = norm(dv);
  if (d == 0.0) return 0;
  if (d > r1 + r2 || d < std::abs(r1 - r2)) return 0;
  const double a = (r1 * r1 - r2 * r2 + d * d) / (2.0 * d);
  const double h2 = r1 * r1 - a * a;
  const double h = h2 > 0.0 ? std::sqrt(h2) : 0.0;
  const Point u = dv / d;
  const Point base = c1 + u * a;
  out[0] = base + perp(u) * h;
  out[1] = base - perp(u) * h;
  return h > 0.0 ? 2 : 1;
}

inline Closest arc_arc(const ArcGeom& A, const ArcGeom& B) {
  Closest best;
  if (A.R == 0.0) return point_arc(A.c, B);
  if (B.R == 0.0) return point_arc(B.c, A).swapped();

  Point x[2];
  const int k = circle_circle(A.c, A.R, B.c, B.R, x);
  for (int i = 0; i < k; ++i)
    if (A.holds_angle(angle_of(x[i] - A.c)) && B.holds_angle(angle_of(x[i] - B.c))) {
      best.take(0.0, x[i], x[i]);
      return best;
    }

  if (!A.full()) {
    for (Point e : {A.first(), A.last()}) {
      Closest c = point_arc(e, B);
      best.take(c.d, c.a, c.b);
    }
  }
  if (!B.full()) {
    for (Point e : {B.first(), B.last()}) {
      Closest c = point_arc(e, A);
      best.take(c.d, c.b, c.a);
    }
  }
  const Point dv = B.c - A.c;
  const double d = norm(dv);
  if (d > 0.0) {
    const double th = angle_of(dv);
    for (double ta : {th, th + kPi}) {
      if (!A.holds_angle(ta, 0.0)) continue;
      const Point pa = A.at_angle(ta);
      for (double tb : {th, th + kPi}) {
        if (!B.holds_angle(tb, 0.0)) continue;
        const Point pb = B.at_angle(tb);
        best.take(dist(pa, pb), pa, pb);
      }
    }
  } else {
    // Concentric: radial gap wherever the angular ranges overlap.
    for (double t : {A.lo, A.lo + A.span})
      if (B.holds_angle(t, 0.0)) best.take(std::abs(A.R - B.R), A.at_angle(t), B.at_angle(t));
    for (double t : {B.lo, B.lo + B.span})
      if (A.holds_angle(t, 0.0)) best.take(std::abs(A.R - B.R), A.at_angle(t), B.at_angle(t));
  }
  return best;
}

// Smallest t >= 0 where the ray from o along unit u meets the arc.
inline std::optional<double> ray_arc(Point o, Point u, const ArcGeom& g, double tol = 1e-11) {
  const Point w = o - g.c;
  const double b = dot(u, w);
  const double c = norm2(w) - g.R * g.R;
  const double disc = b * b - c;
  if (disc < 0.0) return std::nullopt;
  const double s = std::sqrt(disc);
  std::optional<double> best;
  for (double t : {-b - s, -b + s}) {
    if (t < -tol * std::max(1.0, g.R)) continue;
    const Point p = o + u * std::max(t, 0.0);
    if (!g.holds_angle(angle_of(p - g.c), 1e-12)) continue;
    const double tt = std::max(t, 0.0);
    if (!best || tt < *best) best = tt;
  }
  return best;
}

}  // namespace pctc
