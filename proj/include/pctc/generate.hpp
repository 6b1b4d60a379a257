#pragma once

// Instance generators. All of them are deterministic in the seed.

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "geom.hpp"

namespace pctc::gen {

enum class Kind { Uniform, TwoClusters, Circle, Collinear, CocircularStress };

inline std::optional<Kind> parse_kind(std::string_view s) {
  if (s == "uniform") return Kind::Uniform;
  if (s == "two_clusters") return Kind::TwoClusters;
  if (s == "circle") return Kind::Circle;
  if (s == "collinear") return Kind::Collinear;
  if (s == "cocircular_stress") return Kind::CocircularStress;
  return std::nullopt;
}

inline const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Uniform: return "uniform";
    case Kind::TwoClusters: return "two_clusters";
    case Kind::Circle: return "circle";
    case Kind::Collinear: return "collinear";
    case Kind::CocircularStress: return "cocircular_stress";
  }
  return "?";
}

struct Params {
  double delta = 0.25;  // absolute
  double sep = 4.0;     // two_clusters: center distance in cluster radii
  double radius = 1.0;  // cluster / circle radius
};

struct Generated {
  Instance instance;
  std::string log;  // what the general-position pass did, if anything
};

namespace detail {

inline Point in_disk(std::mt19937_64& rng, Point c, double r) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double t = 2.0 * kPi * u(rng);
  const double s = r * std::sqrt(u(rng));
  return c + unit_from_angle(t) * s;
}

}  // namespace detail

inline Generated generate(Kind kind, int n, std::uint64_t seed, const Params& prm = {}) {
  if (n < 1) throw GeometryError("generate needs n >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Generated g;
  auto& pts = g.instance.points;
  g.instance.delta = prm.delta;
  pts.reserve(std::size_t(n));
  switch (kind) {
    case Kind::Uniform:
      for (int i = 0; i < n; ++i) pts.push_back({u(rng), u(rng)});
      break;
    case Kind::TwoClusters: {
      const Point a{0.0, 0.0}, b{prm.sep * prm.radius, 0.0};
      for (int i = 0; i < n; ++i) pts.push_back(detail::in_disk(rng, i % 2 ? b : a, prm.radius));
      break;
    }
    case Kind::Circle:
      for (int i = 0; i < n; ++i) {
        const double r = prm.radius * (1.0 + 0.05 * (u(rng) - 0.5));
        pts.push_back(unit_from_angle(2.0 * kPi * u(rng)) * r);
      }
      break;
    case Kind::Collinear: {
      const Point dir = unit_from_angle(kPi * u(rng));
      for (int i = 0; i < n; ++i) pts.push_back(dir * (prm.radius * u(rng)));
      break;
    }
    case Kind::CocircularStress: {
      // Evenly spaced points on one circle, plus duplicates of the first few.
      const double phase = 2.0 * kPi * u(rng);
      const int ring = std::max(1, n - n / 8);
      for (int i = 0; i < ring; ++i) pts.push_back(unit_from_angle(phase + 2.0 * kPi * i / ring) * prm.radius);
      for (int i = ring; i < n; ++i) pts.push_back(pts[std::size_t(i - ring)]);
      const std::vector<Point> before = pts;
      if (enforce_general_position(pts)) {
        g.instance.perturbed = true;
        int moved = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) moved += !(pts[i] == before[i]);
        g.log = "general position: jittered " + std::to_string(moved) + " of " + std::to_string(n) + " points";
      }
      break;
    }
  }
  return g;
}

}  // namespace pctc::gen
