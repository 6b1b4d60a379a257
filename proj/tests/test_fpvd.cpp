#include <gtest/gtest.h>

#include <random>

#include "pctc/fpvd.hpp"

using namespace pctc;

namespace {

std::vector<Point> cloud(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Point> p;
  for (int i = 0; i < n; ++i) p.push_back({u(rng), u(rng)});
  return p;
}

}  // namespace

TEST(Fpvd, TwoSitesIsOneLine) {
  const std::vector<Point> p{{0, 0}, {2, 0}};
  const Fpvd f = build_fpvd(p);
  EXPECT_EQ(f.size(), 2u);
  ASSERT_EQ(f.edges.size(), 1u);
  EXPECT_EQ(f.edges[0].kind, EdgeKind::Line);
  EXPECT_NEAR(f.root.x, 1.0, 1e-15);
  EXPECT_NEAR(f.root_weight, 1.0, 1e-15);
}

TEST(Fpvd, TriangleHasOneVertex) {
  const std::vector<Point> p{{0, 0}, {4, 0}, {1, 3}};
  const Fpvd f = build_fpvd(p);
  EXPECT_EQ(f.vertices.size(), 1u);
  EXPECT_EQ(f.edges.size(), 3u);
  for (const auto& e : f.edges) EXPECT_EQ(e.kind, EdgeKind::Ray);
}

TEST(Fpvd, InteriorPointsAreNotSites) {
  const std::vector<Point> p{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}, {0.3, 0.6}};
  const Fpvd f = build_fpvd(p);
  EXPECT_EQ(f.size(), 4u);
  for (int s : f.site_index) EXPECT_LT(s, 4);
}

TEST(Fpvd, VertexWeightsAreTheirGeneratorDistances) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    const auto p = cloud(rng, 5 + t);
    const Fpvd f = build_fpvd(p);
    for (const auto& v : f.vertices) {
      for (int g : v.generators) EXPECT_NEAR(dist(v.at, f.sites[g]), v.weight, 1e-9);
      EXPECT_NEAR(f.weight(v.at), v.weight, 1e-9);
    }
  }
}

TEST(Fpvd, EdgesAreBisectors) {
  std::mt19937_64 rng(12);
  const auto p = cloud(rng, 40);
  const Fpvd f = build_fpvd(p);
  for (const auto& e : f.edges) {
    const double t = std::isfinite(e.t1) ? 0.5 * (e.t0 + e.t1) : (std::isfinite(e.t0) ? e.t0 + 1.0 : 0.0);
    const Point x = e.at(t);
    EXPECT_NEAR(dist(x, f.sites[e.generators[0]]), dist(x, f.sites[e.generators[1]]), 1e-9);
  }
}

TEST(Fpvd, TreeShape) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 20; ++t) {
    const auto p = cloud(rng, 3 + 3 * t);
    const Fpvd f = build_fpvd(p);
    // h sites give h - 2 vertices and 2h - 3 edges
    const std::size_t h = f.size();
    EXPECT_EQ(f.vertices.size(), h - 2);
    EXPECT_EQ(f.edges.size(), 2 * h - 3);
  }
}

TEST(Fpvd, CollinearInputHasParallelLines) {
  const std::vector<Point> p{{0, 0}, {1, 1}, {3, 3}};
  const Fpvd f = build_fpvd(p);
  EXPECT_EQ(f.size(), 2u);
  EXPECT_NEAR(f.root_weight, dist(p[0], p[2]) / 2, 1e-13);
}

TEST(Fpvd, LocateFindsTheFarthestSite) {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> u(-2.0, 3.0);
  const auto p = cloud(rng, 60);
  const Fpvd f = build_fpvd(p);
  for (int k = 0; k < 2000; ++k) {
    const Point q{u(rng), u(rng)};
    EXPECT_NEAR(dist(q, f.sites[f.locate(q)]), f.weight(q), 1e-12);
  }
}

TEST(Fpvd, MergeEqualsRebuild) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 30; ++t) {
    const auto a = cloud(rng, 3 + t % 9), b = cloud(rng, 2 + t % 7);
    std::vector<Point> all = a;
    all.insert(all.end(), b.begin(), b.end());
    const Fpvd m = merge_fpvd(build_fpvd(a), build_fpvd(b)), r = build_fpvd(all);
    EXPECT_EQ(m.size(), r.size());
    EXPECT_NEAR(m.root_weight, r.root_weight, 1e-13);
    EXPECT_EQ(sorted_vertex_weights(m), sorted_vertex_weights(r));
  }
}

TEST(Fpvd, PrefixDiagramsMatchTheirPrefixes) {
  std::mt19937_64 rng(16);
  const auto p = cloud(rng, 25);
  const PrefixFpvds pf = prefix_fpvds(p);
  ASSERT_EQ(pf.forward.size(), p.size() + 1);
  for (std::size_t k = 1; k <= p.size(); ++k) {
    const std::vector<Point> head(p.begin(), p.begin() + k);
    EXPECT_NEAR(pf.forward[k]->root_weight, build_fpvd(head).root_weight, 1e-13);
    const std::vector<Point> tail(p.end() - k, p.end());
    EXPECT_NEAR(pf.backward[p.size() - k]->root_weight, build_fpvd(tail).root_weight, 1e-13);
  }
}

TEST(Fpvd, SortedWeightsAreIncreasing) {
  std::mt19937_64 rng(17);
  const auto w = sorted_vertex_weights(build_fpvd(cloud(rng, 50)));
  for (std::size_t k = 1; k < w.size(); ++k) EXPECT_GT(w[k], w[k - 1]);
}
