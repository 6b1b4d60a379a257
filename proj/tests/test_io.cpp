#include <gtest/gtest.h>

#include <cstring>
#include <random>

#include "pctc/bench.hpp"
#include "pctc/generate.hpp"
#include "pctc/io.hpp"
#include "pctc/svg.hpp"

using namespace pctc;

namespace {

bool bit_equal(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

SolveConfig quick() {
  SolveConfig c;
  c.angle_count = 60;
  c.m_grid = 4;
  return c;
}

}  // namespace

TEST(Instance, ParsesTheSmallExample) {
  const Instance inst = io::parse_instance("pctc 1\ndelta 4.0\nn 2\n0 0\n10 0\n");
  ASSERT_EQ(inst.points.size(), 2u);
  EXPECT_EQ(inst.delta, 4.0);
  EXPECT_EQ(inst.points[1], (Point{10, 0}));
}

TEST(Instance, CommentsAndBlankLines) {
  const Instance inst = io::parse_instance("# two points\npctc 1\n\ndelta 0.5\nn 2\n# first\n1 2\n3 4\n");
  EXPECT_EQ(inst.points.size(), 2u);
  EXPECT_EQ(inst.delta, 0.5);
}

TEST(Instance, CountMismatch) {
  EXPECT_THROW(io::parse_instance("pctc 1\ndelta 4.0\nn 3\n0 0\n10 0\n"), io::CountMismatch);
}

TEST(Instance, NegativeDelta) {
  try {
    io::parse_instance("pctc 1\ndelta -1\nn 1\n0 0\n");
    FAIL() << "no throw";
  } catch (const io::NegativeDelta& e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(Instance, ErrorsCarryTheLine) {
  try {
    io::parse_instance("pctc 1\ndelta 1\nn 2\n0 0\n1 x\n");
    FAIL() << "no throw";
  } catch (const io::ParseError& e) {
    EXPECT_EQ(e.line(), 5);
  }
  EXPECT_THROW(io::parse_instance("pctc 2\ndelta 1\nn 0\n"), io::ParseError);
  EXPECT_THROW(io::parse_instance(""), io::ParseError);
  EXPECT_THROW(io::parse_instance("pctc 1\ndelta 1\nn 1\n0 0 0\n"), io::ParseError);
}

TEST(Instance, RoundTripIsBitExact) {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  Instance a;
  a.delta = 0.1 + 1e-17;
  for (int k = 0; k < 200; ++k) a.points.push_back({u(rng) / 3.0, u(rng) * 1e-300});
  a.points.push_back({5e-324, -0.0});
  const Instance b = io::parse_instance(io::write_instance(a));
  ASSERT_EQ(a.points.size(), b.points.size());
  EXPECT_TRUE(bit_equal(a.delta, b.delta));
  for (std::size_t k = 0; k < a.points.size(); ++k) {
    EXPECT_TRUE(bit_equal(a.points[k].x, b.points[k].x));
    EXPECT_TRUE(bit_equal(a.points[k].y, b.points[k].y));
  }
}

TEST(Solution, RoundTrip) {
  const std::vector<Point> p{{0, 0}, {10, 0}, {0.5, 0.2}};
  const SolveReport r = solve(p, 4.0, quick());
  const io::SolutionFile f = io::parse_solution(io::write_solution(r));
  EXPECT_TRUE(bit_equal(f.d1.radius, r.solution.d1.radius));
  EXPECT_TRUE(bit_equal(f.d2.center.x, r.solution.d2.center.x));
  EXPECT_EQ(f.tag, case_name(r.tag));
  EXPECT_TRUE(bit_equal(f.cost, r.solution.cost));
  ASSERT_TRUE(f.coverage.has_value());
  EXPECT_TRUE(bit_equal(*f.coverage, r.verification.coverage));
}

TEST(Solution, RejectsJunk) {
  EXPECT_THROW(io::parse_solution("pctc-solution 1\ndisk 0 0 -1\n"), io::ParseError);
  EXPECT_THROW(io::parse_solution("pctc-solution 1\ncase middling\n"), io::ParseError);
  EXPECT_THROW(io::parse_solution("nope\n"), io::ParseError);
}

TEST(Generate, Deterministic) {
  for (gen::Kind k : {gen::Kind::Uniform, gen::Kind::TwoClusters, gen::Kind::Circle, gen::Kind::Collinear,
                      gen::Kind::CocircularStress}) {
    const auto a = gen::generate(k, 40, 9), b = gen::generate(k, 40, 9), c = gen::generate(k, 40, 10);
    EXPECT_EQ(a.instance.points, b.instance.points) << gen::kind_name(k);
    EXPECT_NE(a.instance.points, c.instance.points) << gen::kind_name(k);
    EXPECT_EQ(a.instance.points.size(), 40u);
    EXPECT_EQ(*gen::parse_kind(gen::kind_name(k)), k);
  }
  EXPECT_FALSE(gen::parse_kind("spiral").has_value());
}

TEST(Generate, CocircularStressIsLogged) {
  const auto g = gen::generate(gen::Kind::CocircularStress, 24, 3);
  EXPECT_FALSE(g.log.empty());
}

TEST(Generate, TwoClustersSitApart) {
  gen::Params prm;
  prm.radius = 0.5;
  prm.sep = 6.0;
  const auto g = gen::generate(gen::Kind::TwoClusters, 30, 4, prm);
  int right = 0;
  for (const Point& x : g.instance.points) right += x.x > 1.5;
  EXPECT_EQ(right, 15);
}

TEST(Svg, WellFormed) {
  const auto g = gen::generate(gen::Kind::Uniform, 20, 5);
  const SolveReport r = solve(g.instance.points, g.instance.delta, quick());
  svg::Options opt;
  opt.fpvd_overlay = true;
  const std::string s = svg::render_svg(g.instance.points, g.instance.delta, r, opt);
  EXPECT_EQ(s.rfind("<?xml", 0), 0u);
  EXPECT_NE(s.find("<svg"), std::string::npos);
  EXPECT_NE(s.find("</svg>"), std::string::npos);
  std::size_t circles = 0;
  for (std::size_t at = s.find("<circle"); at != std::string::npos; at = s.find("<circle", at + 1)) ++circles;
  EXPECT_GE(circles, 2u + g.instance.points.size());
  EXPECT_EQ(s.find("nan"), std::string::npos);
}

TEST(Svg, ConcentricDisksAtZeroDelta) {
  const std::vector<Point> p{{0, 0}, {1, 0}, {0, 1}};
  const SolveReport r = solve(p, 0.0);
  const std::string s = svg::render_svg(p, 0.0, r);
  EXPECT_NE(s.find("</svg>"), std::string::npos);
  EXPECT_EQ(s.find("nan"), std::string::npos);
}

TEST(Bench, EmptySuiteGivesAHeaderOnly) {
  const auto rows = bench::run(bench::Suite{});
  EXPECT_TRUE(rows.empty());
  const std::string t = bench::format_table(rows);
  EXPECT_EQ(std::count(t.begin(), t.end(), '\n'), 1);
}

TEST(Bench, SmallSuite) {
  bench::Suite s;
  s.kinds = {gen::Kind::Uniform};
  s.ns = {8, 16};
  s.reps = 2;
  s.cfg = quick();
  const auto rows = bench::run(s);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].tags[0] + rows[0].tags[1] + rows[0].tags[2], 2);
  EXPECT_GT(rows[1].median_evaluations, 0.0);
  EXPECT_DOUBLE_EQ(bench::median({3.0, 1.0, 2.0}), 2.0);
}
