#include <gtest/gtest.h>

#include <deque>
#include <random>

#include "pctc/nearby.hpp"
#include "pctc/oracle.hpp"
#include "pctc/oracle_matrix.hpp"

using namespace pctc;

namespace {

std::vector<Point> cloud(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Point> p;
  for (int i = 0; i < n; ++i) p.push_back({u(rng), u(rng)});
  return p;
}

}  // namespace

TEST(Anchors, StrictlyInsideTheHull) {
  std::mt19937_64 rng(41);
  const auto p = cloud(rng, 30);
  const auto h = convex_hull(p);
  const auto m = build_m_set(h, 6);
  EXPECT_GT(m.size(), 1u);
  for (const Point& x : m) EXPECT_TRUE(detail::inside_convex(h, x));
}

TEST(AnchorContext, SidesPartitionThePoints) {
  std::mt19937_64 rng(42);
  const auto p = cloud(rng, 25);
  const DirectedLine l = DirectedLine::from_angle({0.5, 0.5}, 0.7);
  const AnchorContext c = build_anchor_context(p, {0.5, 0.5}, l, 0.2);
  EXPECT_EQ(c.np() + c.nq(), int(p.size()));
  for (int k : c.p_ids) EXPECT_GE(l.side(p[k]), -1e-12);
  for (int k : c.q_ids) EXPECT_LT(l.side(p[k]), 0.0);
  // corner cells
  EXPECT_TRUE(c.positive_ids(0, 0).empty());
  EXPECT_EQ(int(c.positive_ids(c.np(), c.nq()).size()), int(p.size()));
}

TEST(MatrixSearch, CheapestValidCellMatchesExhaustive) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::deque<std::vector<Point>> keep;
  for (int t = 0; t < 25; ++t) {
    keep.push_back(cloud(rng, 6 + t));
    const auto& p = keep.back();
    const Point m{0.3 + 0.4 * u(rng), 0.3 + 0.4 * u(rng)};
    const AnchorContext c = build_anchor_context(p, m, DirectedLine::from_angle(m, 6.28 * u(rng)), 0.1 + 0.4 * u(rng));
    const oracle::MatrixOracle o = oracle::oracle_matrix(c);
    SplitCache cache;
    MatrixStats st;
    const auto r = compute_r_ml(c, cache, &st);
    ASSERT_TRUE(r.has_value());
    EXPECT_NEAR(*r, o.min_valid, 1e-9);
    EXPECT_LE(double(st.evaluations), 10.0 * budget_unit(c.np(), c.nq()));
  }
}

TEST(MatrixSearch, DiscardedRegionsHoldNothingCheaper) {
  std::mt19937_64 rng(44);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 15; ++t) {
    const auto p = cloud(rng, 10 + 2 * t);
    const Point m{0.4 + 0.2 * u(rng), 0.4 + 0.2 * u(rng)};
    const AnchorContext c = build_anchor_context(p, m, DirectedLine::from_angle(m, 6.28 * u(rng)), 0.3 * u(rng));
    SplitCache cache;
    MatrixContext mx(c, cache, true);
    mx.run();
    const oracle::MatrixOracle o = oracle::oracle_matrix(c);
    ASSERT_NE(mx.best(), nullptr);
    for (const DiscardRecord& d : mx.records()) {
      double mn = kInf;
      for (int i = d.i0; i <= d.i1; ++i)
        for (int j = d.j0; j <= d.j1; ++j) mn = std::min(mn, o.cell(i, j).cost);
      EXPECT_FALSE(mn < d.bound - 1e-9 && mn < o.min_cost + 1e-9) << certificate_name(d.cert);
    }
  }
}

TEST(MatrixSearch, OppositeDepositsLowerTheResult) {
  std::mt19937_64 rng(45);
  const auto p = cloud(rng, 12);
  const AnchorContext c = build_anchor_context(p, {0.5, 0.5}, DirectedLine::from_angle({0.5, 0.5}, 1.0), 0.2);
  SplitCache cache;
  const auto alone = compute_r_ml(c, cache);
  ASSERT_TRUE(alone.has_value());
  const std::vector<double> deposit{*alone * 0.5};
  EXPECT_DOUBLE_EQ(*compute_r_ml(c, cache, nullptr, deposit), *alone * 0.5);
}

TEST(EvaluateCell, MatchesADirectSolve) {
  std::mt19937_64 rng(46);
  const auto p = cloud(rng, 14);
  const AnchorContext c = build_anchor_context(p, {0.5, 0.5}, DirectedLine::from_angle({0.5, 0.5}, 2.0), 0.25);
  SplitCache cache;
  for (int i = 0; i <= c.np(); ++i)
    for (int j = 0; j <= c.nq(); ++j) {
      const CellEvaluation ev = evaluate_cell(c, i, j, cache);
      const auto neg = c.gather(c.negative_ids(i, j)), pos = c.gather(c.positive_ids(i, j));
      if (neg.empty() && pos.empty()) continue;
      EXPECT_NEAR(ev.cost, solve_restricted(neg, pos, 0.25).cost, 1e-9);
    }
}

TEST(Nearby, AgreesWithTheOracle) {
  std::mt19937_64 rng(47);
  NearbyConfig cfg;
  cfg.angle_count = 36;
  cfg.m_grid = 5;
  for (int t = 0; t < 6; ++t) {
    const auto p = cloud(rng, 4 + t % 6);
    const double delta = 0.2 * diameter(p) * (1 + t % 3);
    const NearbyResult r = solve_nearby(p, delta, cfg);
    ASSERT_TRUE(r.solution.has_value());
    const oracle::PctcResult o = oracle::oracle_pctc(p, delta);
    // nearby is one candidate; it never beats the global optimum
    EXPECT_GE(r.solution->cost, o.cost - 1e-6 * std::max(1.0, o.cost));
  }
}

TEST(Reconstruction, ReachesTheCheapestCell) {
  std::mt19937_64 rng(48);
  const auto p = cloud(rng, 16);
  const AnchorContext c = build_anchor_context(p, {0.5, 0.5}, DirectedLine::from_angle({0.5, 0.5}, 0.4), 0.15);
  SplitCache cache;
  MatrixContext mx(c, cache);
  mx.run();
  const double r = mx.best()->cost;
  const Reconstruction rc = reconstruct_bos(c, r, cache);
  const oracle::MatrixOracle o = oracle::oracle_matrix(c);
  double comp = kInf;
  for (const auto& ev : o.cells)
    if (ev.cost <= r + 1e-9) comp = std::min(comp, ev.sol.companion());
  if (rc.matched) {
    ASSERT_TRUE(rc.solution.has_value());
    EXPECT_NEAR(rc.solution->cost, r, 1e-9);
    EXPECT_GE(rc.solution->companion(), comp - 1e-9);
  }
}
