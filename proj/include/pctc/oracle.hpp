#pragma once

// Brute-force ground truth. Shares only Point/Disk and the polygon distance
// routine with the rest of the library; hulls here are polygons.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "geom.hpp"

namespace pctc::oracle {

class SizeLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// O(n^4) minimum enclosing disk over pair and triple candidates.
inline Disk brute_med(std::span<const Point> p) {
  if (p.empty()) throw GeometryError("brute_med of an empty set");
  const std::size_t n = p.size();
  auto covers = [&](const Disk& d) {
    for (const Point& q : p)
      if (dist(q, d.center) > d.radius * (1.0 + 1e-12) + 1e-14) return false;
    return true;
  };
  Disk best{p[0], n == 1 ? 0.0 : kInf};
  if (n == 1) return best;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Disk d{midpoint(p[i], p[j]), dist(p[i], p[j]) / 2};
      if (d.radius < best.radius && covers(d)) best = d;
      for (std::size_t k = j + 1; k < n; ++k) {
        const Point a = p[i], b = p[j], c = p[k];
        const double den = 2.0 * cross(b - a, c - a);
        if (std::abs(den) < 1e-18) continue;
        const double b2 = norm2(b - a), c2 = norm2(c - a);
        const Point o = a + Point{((c - a).y * b2 - (b - a).y * c2) / den, ((b - a).x * c2 - (c - a).x * b2) / den};
        Disk e{o, std::max({dist(o, a), dist(o, b), dist(o, c)})};
        if (e.radius < best.radius && covers(e)) best = e;
      }
    }
  double r = 0.0;
  for (const Point& q : p) r = std::max(r, dist(q, best.center));
  best.radius = r;
  return best;
}

// Boundary-sampled intersection of radius-r disks, built independently of
// the diagram code: vertices are pairwise circle intersections lying in every
// disk, arcs between consecutive vertices are sampled densely. The sample
// polygon is inscribed, so it never leaves the true region.
class SampledHull {
 public:
  explicit SampledHull(int samples = 4096) : N_(samples) {}

  int resolution() const { return N_; }

  // Empty result: empty region.
  std::vector<Point> build(std::span<const Point> sites, double r) const {
    const std::size_t n = sites.size();
    const double band = 1e-12 * std::max(1.0, r);
    auto inside_all = [&](Point q) {
      for (const Point& s : sites)
        if (dist(q, s) > r + band) return false;
      return true;
    };
    if (n == 1) return r <= band ? std::vector<Point>{sites[0]} : circle(sites[0], r, 0.0, 2.0 * kPi, N_);
    std::vector<Point> v;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Point d = sites[j] - sites[i];
        const double L = norm(d);
        if (L == 0.0 || L > 2.0 * r) continue;
        const double a = L / 2.0;
        const double h = std::sqrt(std::max(0.0, r * r - a * a));
        const Point m = sites[i] + d * 0.5, u = perp(d / L);
        for (Point q : {m + u * h, m - u * h})
          if (inside_all(q)) v.push_back(q);
      }
    if (v.empty()) {
      // No vertex: either one disk sits inside all others or the set is empty.
      for (const Point& s : sites) {
        bool ok = true;
        for (const Point& t : sites) ok = ok && dist(s, t) <= band;
        if (ok) return r <= band ? std::vector<Point>{s} : circle(s, r, 0.0, 2.0 * kPi, N_);
      }
      return {};
    }
    Point c{0, 0};
    for (const Point& q : v) c += q;
    c = c / double(v.size());
    std::sort(v.begin(), v.end(), [&](Point a, Point b) { return angle_of(a - c) < angle_of(b - c); });
    std::vector<Point> u;
    for (const Point& q : v)
      if (u.empty() || dist(u.back(), q) > 1e-10 * std::max(1.0, r)) u.push_back(q);
    while (u.size() > 1 && dist(u.front(), u.back()) <= 1e-10 * std::max(1.0, r)) u.pop_back();
    if (u.size() == 1) return u;
    // Arc between consecutive vertices: the site whose ccw arc stays inside.
    struct Piece { Point s; double lo, span; };
    std::vector<Piece> pieces;
    double total = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) {
      const Point a = u[k], b = u[(k + 1) % u.size()];
      Piece best{{}, 0.0, -1.0};
      double best_excess = kInf;
      for (const Point& s : sites) {
        if (std::abs(dist(a, s) - r) > 1e-9 * std::max(1.0, r)) continue;
        if (std::abs(dist(b, s) - r) > 1e-9 * std::max(1.0, r)) continue;
        const double lo = angle_of(a - s);
        const double span = wrap_two_pi(angle_of(b - s) - lo);
        const Point mid = s + unit_from_angle(lo + span / 2) * r;
        double excess = 0.0;
        for (const Point& t : sites) excess = std::max(excess, dist(mid, t) - r);
        if (excess < best_excess) { best_excess = excess; best = {s, lo, span}; }
      }
      if (best.span < 0.0) continue;
      pieces.push_back(best);
      total += best.span;
    }
    std::vector<Point> out;
    for (const Piece& p : pieces) {
      const int k = std::max(1, int(std::ceil(N_ * p.span / std::max(total, 1e-300))));
      auto arc = circle(p.s, r, p.lo, p.span, k);
      out.insert(out.end(), arc.begin(), arc.end());
    }
    return out;
  }

 private:
  // k points from angle lo (inclusive) to lo+span (exclusive).
  static std::vector<Point> circle(Point c, double r, double lo, double span, int k) {
    std::vector<Point> out;
    for (int i = 0; i < k; ++i) out.push_back(c + unit_from_angle(lo + span * i / k) * r);
    return out;
  }

  int N_;
};

struct RestrictedResult {
  double cost = 0.0;
  double companion = 0.0;
  Point c1, c2;
  double r1 = 0.0, r2 = 0.0;
};

namespace detail {

inline double poly_gap(const std::vector<Point>& a, const std::vector<Point>& b) {
  if (a.empty() || b.empty()) return kInf;
  return convex_distance(a, b).distance;
}

template <class G>
double bisect(G&& g, double lo, double hi, double tol) {
  // smallest r in [lo, hi] with g(r) <= 0, g monotone nonincreasing
  if (g(lo) <= 0.0) return lo;
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double m = 0.5 * (lo + hi);
    if (g(m) <= 0.0) hi = m; else lo = m;
  }
  return hi;
}

}  // namespace detail

// Restricted problem by bisection on polygonal hull distance.
// cost_only skips the companion searches and leaves companion at 0.
inline RestrictedResult oracle_restricted(std::span<const Point> p1, std::span<const Point> p2, double delta,
                                          int N = 4096, bool cost_only = false) {
  if (p1.empty() && p2.empty()) throw GeometryError("oracle_restricted with two empty parts");
  RestrictedResult out;
  if (p1.empty() || p2.empty()) {
    const Disk m = brute_med(p1.empty() ? p2 : p1);
    out.cost = m.radius;
    out.companion = 0.0;
    out.c1 = out.c2 = m.center;
    out.r1 = p1.empty() ? 0.0 : m.radius;
    out.r2 = p1.empty() ? m.radius : 0.0;
    return out;
  }
  const Disk m1 = brute_med(p1), m2 = brute_med(p2);
  if (dist(m1.center, m2.center) <= delta) {
    out = {std::max(m1.radius, m2.radius), std::min(m1.radius, m2.radius), m1.center, m2.center, m1.radius,
           m2.radius};
    return out;
  }
  std::vector<Point> all(p1.begin(), p1.end());
  all.insert(all.end(), p2.begin(), p2.end());
  const double diam = diameter(all);
  const double tol = 1e-13 * std::max(1.0, diam);
  const SampledHull poly(N);
  // Hull builds are the bottleneck: a coarse pass narrows the window first.
  const SampledHull coarse(std::max(64, N / 16));
  auto gap = [&](const SampledHull& P, double ra, double rb) {
    return detail::poly_gap(P.build(p1, ra), P.build(p2, rb)) - delta;
  };

  const double lo = std::max(m1.radius, m2.radius);
  const double hi = lo + diam;
  // Coarse pass, then the fine polygons inside a window padded by the
  // coarse sampling error.
  auto two_pass = [&](auto&& g, double l, double h) {
    const double rc = detail::bisect([&](double r) { return g(coarse, r); }, l, h, tol);
    const double pad = rc * (1.0 - std::cos(2.0 * kPi / coarse.resolution())) * 8.0 + 1e-9 * std::max(1.0, rc);
    double a = std::max(l, rc - pad), b = std::min(h, rc + pad);
    if (g(poly, a) <= 0.0) a = l;
    if (g(poly, b) > 0.0) b = h;
    return detail::bisect([&](double r) { return g(poly, r); }, a, b, tol);
  };
  const double rs = two_pass([&](const SampledHull& P, double r) { return gap(P, r, r); }, lo, hi);
  if (cost_only) {
    out.cost = rs;
    return out;
  }

  auto companion = [&](bool first_fixed) {
    const double rlo = first_fixed ? m2.radius : m1.radius;
    return two_pass(
        [&](const SampledHull& P, double r) { return first_fixed ? gap(P, rs, r) : gap(P, r, rs); }, rlo, rs);
  };
  const double ca = companion(true), cb = companion(false);
  out.cost = rs;
  if (ca <= cb) { out.r1 = rs; out.r2 = ca; } else { out.r1 = cb; out.r2 = rs; }
  out.companion = std::min(ca, cb);
  const auto A = poly.build(p1, out.r1), B = poly.build(p2, out.r2);
  if (!A.empty() && !B.empty()) {
    const auto cd = convex_distance(A, B);
    out.c1 = cd.on_a;
    out.c2 = cd.on_b;
  }
  return out;
}

struct PctcResult {
  double cost = 0.0;
  double companion = 0.0;
  std::vector<char> first;  // coloring achieving it
};

// Exhaustive over colorings (fixing the first point's color), pruned by a
// lower bound on each coloring's restricted cost.
inline PctcResult oracle_pctc(std::span<const Point> p, double delta, int N = 4096) {
  const int n = static_cast<int>(p.size());
  if (n > 12) throw SizeLimit("oracle_pctc supports n <= 12");
  if (n == 0) throw GeometryError("oracle_pctc of an empty set");
  const Disk whole = brute_med(p);
  PctcResult best{whole.radius, 0.0, std::vector<char>(n, 1)};
  // Coincident centers reproduce the single disk, so delta = 0 is settled.
  if (n == 1 || delta <= 0.0) return best;
  // Ties are judged above the sampling error of the hull polygons. Inside
  // that window the costs are re-solved on finer polygons; companions keep
  // the coarse band.
  const double eq = 1e-7 * std::max(1.0, diameter(p));
  const double eq_fine = 1e-8 * std::max(1.0, diameter(p));
  const int N_fine = 4 * N;

  struct Cand { double lb; double comp_lb; std::uint32_t mask; };
  std::vector<Cand> cands;
  for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
    // point 0 always in part A; part B = bits set among 1..n-1
    std::vector<Point> a, b;
    a.push_back(p[0]);
    for (int i = 1; i < n; ++i) ((mask >> (i - 1)) & 1u ? b : a).push_back(p[i]);
    const Disk ma = brute_med(a), mb = brute_med(b);
    // Two radius-r disks with centers within delta fit in a disk of radius
    // r + delta/2 around the midpoint.
    const double lb = std::max({ma.radius, mb.radius, whole.radius - delta * 0.5, 0.0});
    cands.push_back({lb, std::min(ma.radius, mb.radius), mask});
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) { return x.lb < y.lb; });
  auto parts = [&](std::uint32_t mask, std::vector<char>* col) {
    std::pair<std::vector<Point>, std::vector<Point>> ab;
    ab.first.push_back(p[0]);
    for (int i = 1; i < n; ++i) {
      const bool inb = (mask >> (i - 1)) & 1u;
      (inb ? ab.second : ab.first).push_back(p[i]);
      if (col) (*col)[i] = !inb;
    }
    return ab;
  };
  // fine cost of the current best, computed on demand; the single disk is exact
  std::optional<std::uint32_t> best_mask;
  std::optional<double> best_fine;
  double best_coarse = best.cost;
  for (const Cand& c : cands) {
    if (c.lb > best_coarse + eq) break;
    if (c.lb >= best_coarse - eq_fine && c.comp_lb >= best.companion - eq) continue;
    std::vector<char> col(n, 1);
    const auto [a, b] = parts(c.mask, &col);
    const RestrictedResult r = oracle_restricted(a, b, delta, N);
    bool better;
    std::optional<double> fine;
    if (std::abs(r.cost - best_coarse) > eq) {
      better = r.cost < best_coarse;
    } else {
      if (!best_fine) {
        if (best_mask) {
          const auto [ba, bb] = parts(*best_mask, nullptr);
          best_fine = oracle_restricted(ba, bb, delta, N_fine, true).cost;
        } else {
          best_fine = best_coarse;
        }
      }
      fine = oracle_restricted(a, b, delta, N_fine, true).cost;
      better = *fine < *best_fine - eq_fine ||
               (std::abs(*fine - *best_fine) <= eq_fine && r.companion < best.companion - eq);
    }
    if (better) {
      best_coarse = r.cost;
      best.cost = fine.value_or(r.cost);
      best.companion = r.companion;
      best.first = col;
      best_mask = c.mask;
      best_fine = fine;
    }
  }
  return best;
}

struct TwoCenterResult {
  double cost = 0.0;
  double center_distance = 0.0;
};

inline TwoCenterResult oracle_2center(std::span<const Point> p) {
  const int n = static_cast<int>(p.size());
  if (n > 12) throw SizeLimit("oracle_2center supports n <= 12");
  if (n == 0) throw GeometryError("oracle_2center of an empty set");
  TwoCenterResult best{kInf, kInf};
  if (n == 1) return {0.0, 0.0};
  const SampledHull poly(1024);
  const double eq = 1e-9 * std::max(1.0, diameter(p));
  for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
    std::vector<Point> a{p[0]}, b;
    for (int i = 1; i < n; ++i) ((mask >> (i - 1)) & 1u ? b : a).push_back(p[i]);
    const Disk ma = brute_med(a), mb = brute_med(b);
    const double c = std::max(ma.radius, mb.radius);
    if (c > best.cost + eq) continue;
    // Closest feasible centers at the common radius c.
    const double d = detail::poly_gap(poly.build(a, c), poly.build(b, c));
    const double dd = std::isfinite(d) ? d : dist(ma.center, mb.center);
    if (c < best.cost - eq || dd < best.center_distance) {
      if (c < best.cost - eq) best.center_distance = kInf;
      best.cost = std::min(c, best.cost);
      best.center_distance = std::min(best.center_distance, dd);
    }
  }
  return best;
}

}  // namespace pctc::oracle
