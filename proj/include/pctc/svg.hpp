#pragma once

// Standalone SVG of a solved instance: points, the two disks, their centers
// and the segment between them. Optional farthest-point diagram overlay.

#include <algorithm>
#include <cstdio>
#include <span>
#include <string>

#include "fpvd.hpp"
#include "geom.hpp"
#include "solver.hpp"

namespace pctc::svg {

struct Options {
  bool fpvd_overlay = false;
  int size = 640;  // pixels, square
};

namespace detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace detail

inline std::string render_svg(std::span<const Point> pts, double delta, const SolveReport& rep, const Options& opt = {}) {
  using detail::num;
  const Disk& a = rep.solution.d1;
  const Disk& b = rep.solution.d2;
  double lx = std::min(a.center.x - a.radius, b.center.x - b.radius);
  double hx = std::max(a.center.x + a.radius, b.center.x + b.radius);
  double ly = std::min(a.center.y - a.radius, b.center.y - b.radius);
  double hy = std::max(a.center.y + a.radius, b.center.y + b.radius);
  for (const Point& p : pts) {
    lx = std::min(lx, p.x); hx = std::max(hx, p.x);
    ly = std::min(ly, p.y); hy = std::max(hy, p.y);
  }
  double ext = std::max(hx - lx, hy - ly);
  if (!(ext > 0.0)) ext = 1.0;
  const double pad = 0.05 * ext;
  lx -= pad; ly -= pad;
  ext += 2.0 * pad;
  const double k = opt.size / ext;
  // y flipped so the picture matches the usual axes
  auto X = [&](double x) { return (x - lx) * k; };
  auto Y = [&](double y) { return opt.size - (y - ly) * k; };
  const double dot = std::max(1.5, opt.size / 200.0);

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(opt.size) + "\" height=\"" +
       std::to_string(opt.size) + "\" viewBox=\"0 0 " + std::to_string(opt.size) + " " + std::to_string(opt.size) + "\">\n";
  s += "<title>pctc case " + std::string(case_name(rep.tag)) + " cost " + num(rep.solution.cost) + " delta " + num(delta) +
       "</title>\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (opt.fpvd_overlay && pts.size() >= 2) {
    try {
      const Fpvd f = build_fpvd(pts);
      s += "<g stroke=\"#bbbbbb\" stroke-width=\"1\" fill=\"none\">\n";
      const double far_t = 4.0 * ext;
      for (const FpvdEdge& e : f.edges) {
        const double t0 = std::isfinite(e.t0) ? e.t0 : -far_t;
        const double t1 = std::isfinite(e.t1) ? e.t1 : far_t;
        const Point p = e.at(t0), q = e.at(t1);
        s += "<line x1=\"" + num(X(p.x)) + "\" y1=\"" + num(Y(p.y)) + "\" x2=\"" + num(X(q.x)) + "\" y2=\"" + num(Y(q.y)) + "\"/>\n";
      }
      s += "</g>\n";
    } catch (const GeometryError&) {
      // collinear input, nothing to draw
    }
  }

  auto circle = [&](const Disk& d, const char* color) {
    s += "<circle cx=\"" + num(X(d.center.x)) + "\" cy=\"" + num(Y(d.center.y)) + "\" r=\"" + num(d.radius * k) +
         "\" fill=\"" + color + "\" fill-opacity=\"0.12\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>\n";
  };
  circle(a, "#1f77b4");
  circle(b, "#d62728");
  s += "<line x1=\"" + num(X(a.center.x)) + "\" y1=\"" + num(Y(a.center.y)) + "\" x2=\"" + num(X(b.center.x)) + "\" y2=\"" +
       num(Y(b.center.y)) + "\" stroke=\"#2ca02c\" stroke-width=\"1.5\" stroke-dasharray=\"4 3\"/>\n";
  s += "<g fill=\"black\">\n";
  for (const Point& p : pts) s += "<circle cx=\"" + num(X(p.x)) + "\" cy=\"" + num(Y(p.y)) + "\" r=\"" + num(dot) + "\"/>\n";
  s += "</g>\n";
  for (const Disk* d : {&a, &b})
    s += "<path d=\"M " + num(X(d->center.x) - dot * 2) + " " + num(Y(d->center.y)) + " h " + num(dot * 4) + " M " +
         num(X(d->center.x)) + " " + num(Y(d->center.y) - dot * 2) + " v " + num(dot * 4) +
         "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
  s += "</svg>\n";
  return s;
}

}  // namespace pctc::svg
