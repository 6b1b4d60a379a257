// Acceptance run: one PASS/FAIL line per criterion, details on the lines
// below it. `acceptance 1 4 9` runs a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdarg>
#include <cstdlib>
#include <deque>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pctc/bench.hpp"
#include "pctc/distant_far.hpp"
#include "pctc/fpvd.hpp"
#include "pctc/generate.hpp"
#include "pctc/hull.hpp"
#include "pctc/nearby.hpp"
#include "pctc/oracle.hpp"
#include "pctc/oracle_matrix.hpp"
#include "pctc/restricted.hpp"
#include "pctc/solver.hpp"

using namespace pctc;

namespace {

// tolerances, fixed here and nowhere else
constexpr double kOracleRel = 1e-6;     // solver vs exhaustive oracles
constexpr double kTight = 1e-7;         // center distance against delta
constexpr double kMedAbs = 1e-9;        // delta = 0 against the enclosing disk
constexpr double kMatrixAbs = 1e-9;     // r_ml against the exhaustive matrix
constexpr double kBudgetC = 10.0;       // evaluations per budget unit
constexpr double kFpvdRoot = 1e-9;
constexpr double kResidual = 1e-7;      // find_rl witness distance
constexpr double kSlopeMax = 2.4;

using Clock = std::chrono::steady_clock;

std::vector<Point> uniform_points(std::mt19937_64& rng, int n, double w = 1.0, double h = 1.0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Point> p;
  for (int i = 0; i < n; ++i) p.push_back({w * u(rng), h * u(rng)});
  return p;
}

bool close_rel(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max(1.0, std::abs(b)); }

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void note(const char* fmt, ...) __attribute__((format(printf, 2, 3))) {
    char buf[512];
    va_list ap;
    va_start(ap, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, ap);
    va_end(ap);
    notes.push_back(buf);
  }
};

// ---- 1: solver against the exhaustive oracle --------------------------------

Outcome global_oracle() {
  Outcome out;
  std::mt19937_64 rng(101);
  const double factors[] = {0.0, 0.25, 0.5, 1.0, 2.0};
  int total = 0, bad_cost = 0, bad_comp = 0;
  double worst_cost = 0, worst_comp = 0;
  for (int t = 0; t < 400; ++t) {
    const int n = 3 + t % 10;
    const auto p = uniform_points(rng, n, 1.0 + (t % 3));
    const double delta = factors[(t / 10) % 5] * diameter(p);
    const SolveReport r = solve(p, delta);
    const oracle::PctcResult o = oracle::oracle_pctc(p, delta);
    ++total;
    const double s = std::max(1.0, o.cost);
    const double ec = std::abs(r.solution.cost - o.cost) / s, em = std::abs(r.solution.companion() - o.companion) / s;
    worst_cost = std::max(worst_cost, ec);
    worst_comp = std::max(worst_comp, em);
    if (ec > kOracleRel) ++bad_cost;
    if (em > kOracleRel) ++bad_comp;
    if ((ec > kOracleRel || em > kOracleRel) && out.notes.size() < 8)
      out.note("mismatch t=%d n=%d delta=%.4g: %.10f/%.10f vs oracle %.10f/%.10f", t, n, delta, r.solution.cost,
               r.solution.companion(), o.cost, o.companion);
  }
  out.pass = bad_cost == 0 && bad_comp == 0;
  out.note("%d instances, cost mismatches %d, companion mismatches %d, worst rel %.2e / %.2e", total, bad_cost, bad_comp,
           worst_cost, worst_comp);
  return out;
}

// ---- 2: restricted solver against its oracle ---------------------------------

Outcome restricted_oracle() {
  Outcome out;
  std::mt19937_64 rng(202);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int total = 0, bad = 0, tight_checked = 0, tight_bad = 0;
  double worst = 0, worst_tight = 0;
  while (total < 500) {
    const int n = 4 + int(rng() % 77);
    const auto pts = uniform_points(rng, n, 1.0 + 2.0 * u(rng));
    const Point m = pts[rng() % n] * 0.5 + pts[rng() % n] * 0.5;
    const DirectedLine l = DirectedLine::from_angle(m, 2.0 * kPi * u(rng));
    std::vector<Point> a, b;
    for (const Point& p : pts) (l.side(p) > 0 ? a : b).push_back(p);
    if (a.empty() || b.empty() || a.size() > 40 || b.size() > 40) continue;
    const double delta = u(rng) * diameter(pts) * 0.8;
    const PartitionSolution s = solve_restricted(a, b, delta);
    const oracle::RestrictedResult o = oracle::oracle_restricted(a, b, delta);
    ++total;
    const double sc = std::max(1.0, o.cost);
    const double e = std::max(std::abs(s.cost - o.cost), std::abs(s.companion() - o.companion)) / sc;
    worst = std::max(worst, e);
    if (e > kOracleRel) {
      ++bad;
      if (out.notes.size() < 6)
        out.note("mismatch |a|=%zu |b|=%zu delta=%.4g: %.10f/%.10f vs %.10f/%.10f", a.size(), b.size(), delta, s.cost,
                 s.companion(), o.cost, o.companion);
    }
    if (dist(med(a).center, med(b).center) > delta) {
      ++tight_checked;
      const double g = std::abs(s.center_distance() - delta);
      worst_tight = std::max(worst_tight, g);
      if (g > kTight) ++tight_bad;
    }
  }
  out.pass = bad == 0 && tight_bad == 0;
  out.note("%d bipartitions (<= 40 per side), mismatches %d, worst rel %.2e", total, bad, worst);
  out.note("tightness on %d separated pairs, violations %d, worst |d - delta| %.2e", tight_checked, tight_bad, worst_tight);
  return out;
}

// ---- 3: the two ends of the delta range --------------------------------------

Outcome endpoints() {
  Outcome out;
  std::mt19937_64 rng(303);
  int zero_bad = 0, big_bad = 0;
  double worst_zero = 0, worst_big = 0;
  for (int t = 0; t < 60; ++t) {
    const int n = 1 + t % 30;
    const auto p = uniform_points(rng, n, 1.0 + t % 4);
    const SolveReport r = solve(p, 0.0);
    const double e = std::abs(r.solution.cost - med(p).radius);
    worst_zero = std::max(worst_zero, e);
    if (e > kMedAbs) ++zero_bad;
  }
  for (int t = 0; t < 60; ++t) {
    const int n = 2 + t % 11;
    const auto p = uniform_points(rng, n, 1.0 + t % 4);
    const double diam = diameter(p);
    const double delta = (2.0 + (t % 3)) * diam;
    const SolveReport r = solve(p, delta);
    const oracle::TwoCenterResult o = oracle::oracle_2center(p);
    const double e = std::abs(r.solution.cost - o.cost) / std::max(1.0, o.cost);
    worst_big = std::max(worst_big, e);
    if (e > kOracleRel) ++big_bad;
  }
  out.pass = zero_bad == 0 && big_bad == 0;
  out.note("delta = 0: 60 instances, violations %d, worst |cost - MED| %.2e", zero_bad, worst_zero);
  out.note("delta >= 2 diam: 60 instances, violations %d, worst rel %.2e vs 2-center", big_bad, worst_big);
  return out;
}

// ---- 4 and 5: matrix search --------------------------------------------------

struct ContextCase {
  std::vector<Point> pts;
  AnchorContext ctx;
};

std::deque<ContextCase> matrix_contexts(int want) {
  std::deque<ContextCase> out;
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  while (int(out.size()) < want) {
    const int n = 6 + int(rng() % 85);
    auto pts = uniform_points(rng, n, 1.0, 0.4 + u(rng));
    const double wa = u(rng) + 0.1, wb = u(rng) + 0.1, wc = u(rng) + 0.1;
    const Point m = (pts[rng() % n] * wa + pts[rng() % n] * wb + pts[rng() % n] * wc) * (1.0 / (wa + wb + wc));
    const double delta = (0.05 + 0.6 * u(rng)) * diameter(pts);
    const DirectedLine l = DirectedLine::from_angle(m, 2.0 * kPi * u(rng));
    out.push_back({std::move(pts), {}});
    ContextCase& c = out.back();  // deque keeps c.pts in place
    c.ctx = build_anchor_context(c.pts, m, l, delta);
    if (long(c.ctx.np()) * c.ctx.nq() > 4000) out.pop_back();
  }
  return out;
}

Outcome matrix_correctness(const std::deque<ContextCase>& cases, std::vector<double>& ratios) {
  Outcome out;
  int bad = 0, audit_bad = 0, none = 0;
  long records = 0;
  std::array<long, 9> by_cert{};
  for (const ContextCase& cc : cases) {
    const AnchorContext& c = cc.ctx;
    const oracle::MatrixOracle o = oracle::oracle_matrix(c);
    SplitCache cache;
    MatrixStats st;
    const std::optional<double> r = compute_r_ml(c, cache, &st);
    ratios.push_back(double(st.evaluations) / budget_unit(c.np(), c.nq()));
    if (!r) {
      ++none;
      if (std::isfinite(o.min_valid)) ++bad;
    } else if (std::abs(*r - o.min_valid) > kMatrixAbs) {
      ++bad;
      if (out.notes.size() < 6) out.note("r_ml %.12f vs exhaustive min valid %.12f (np=%d nq=%d)", *r, o.min_valid, c.np(), c.nq());
    }
    // certificate audit: nothing inside a discarded region is cheaper than
    // the bound it was discarded with, so the region cannot hold a better cell
    SplitCache cache2;
    MatrixContext mx(c, cache2, true);
    mx.run();
    for (const DiscardRecord& d : mx.records()) {
      ++records;
      ++by_cert[int(d.cert)];
      double mn = kInf;
      for (int i = d.i0; i <= d.i1; ++i)
        for (int j = d.j0; j <= d.j1; ++j) mn = std::min(mn, o.cell(i, j).cost);
      if (mn < d.bound - kMatrixAbs && mn < o.min_cost + kMatrixAbs) {
        ++audit_bad;
        if (out.notes.size() < 10)
          out.note("%s [%d..%d]x[%d..%d] holds cost %.12f below its bound %.12f", certificate_name(d.cert), d.i0, d.i1, d.j0,
                   d.j1, mn, d.bound);
      }
    }
  }
  out.pass = bad == 0 && audit_bad == 0 && cases.size() >= 100;
  out.note("%zu contexts (np*nq <= 4000), r_ml mismatches %d, empty %d", cases.size(), bad, none);
  std::string bc;
  for (int k = 0; k < 9; ++k)
    if (by_cert[k]) bc += std::string(" ") + certificate_name(Certificate(k)) + "=" + std::to_string(by_cert[k]);
  out.note("%ld discard records audited, violations %d;%s", records, audit_bad, bc.c_str());
  return out;
}

Outcome matrix_budget(const std::deque<ContextCase>& cases, const std::vector<double>& ratios) {
  Outcome out;
  const double worst = ratios.empty() ? 0.0 : *std::max_element(ratios.begin(), ratios.end());
  int over = 0;
  for (double r : ratios) over += r > kBudgetC;
  out.pass = over == 0 && !ratios.empty();
  out.note("%zu contexts, worst evaluations / unit %.3f (limit %.0f), over %d", cases.size(), worst, kBudgetC, over);
  // trend over n with a light configuration
  bench::Suite s;
  s.kinds = {gen::Kind::Uniform};
  s.ns = {16, 32, 64, 128};
  s.reps = 1;
  s.cfg.angle_count = 16;
  s.cfg.m_grid = 3;
  s.cfg.filter = CaseFilter::Nearby;
  for (const bench::Row& r : bench::run(s))
    out.note("trend n=%d: evals/context %.1f, per n log n %.4f, worst context ratio %.3f", r.n, r.evals_per_context,
             r.ratio_nlogn, r.max_budget_ratio);
  return out;
}

// ---- 6: farthest-point diagram ----------------------------------------------

Outcome fpvd_suite() {
  Outcome out;
  std::mt19937_64 rng(606);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int root_bad = 0, mono_bad = 0, query_bad = 0, merge_bad = 0;
  double worst_root = 0;
  for (int t = 0; t < 100; ++t) {
    const auto p = uniform_points(rng, 3 + t % 60, 1.0 + t % 3);
    const Fpvd f = build_fpvd(p);
    const Disk d = med(p);
    const double e = std::max(dist(f.root, d.center), std::abs(f.root_weight - d.radius));
    worst_root = std::max(worst_root, e);
    if (e > kFpvdRoot) ++root_bad;
    // weights grow away from the root: walk the tree from the edge or vertex
    // holding it
    const int nv = int(f.vertices.size());
    std::vector<std::vector<int>> adj(nv);
    std::vector<int> start;
    for (const FpvdEdge& ed : f.edges) {
      if (ed.ends[0] >= 0 && ed.ends[1] >= 0) {
        adj[ed.ends[0]].push_back(ed.ends[1]);
        adj[ed.ends[1]].push_back(ed.ends[0]);
      }
      if (ed.kind == EdgeKind::Segment) {
        double tt;
        const Point q = pctc::detail::closest_on_segment(f.root, ed.at(ed.t0), ed.at(ed.t1), &tt);
        if (dist(q, f.root) <= 1e-9)
          for (int v : ed.ends)
            if (v >= 0) start.push_back(v);
      } else {
        const double s = dot(f.root - ed.origin, ed.dir);
        if (s >= ed.t0 - 1e-12 && s <= ed.t1 + 1e-12 && dist(ed.at(s), f.root) <= 1e-9)
          for (int v : ed.ends)
            if (v >= 0) start.push_back(v);
      }
    }
    for (int v = 0; v < nv; ++v)
      if (dist(f.vertices[v].at, f.root) <= 1e-9) start.push_back(v);
    std::vector<int> seen(nv, 0), stack = start;
    for (int v : start) seen[v] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (seen[w]) continue;
        seen[w] = 1;
        if (f.vertices[w].weight < f.vertices[v].weight - 1e-12) ++mono_bad;
        stack.push_back(w);
      }
    }
    for (int v = 0; v < nv; ++v)
      if (!seen[v]) ++mono_bad;  // disconnected from the root
  }
  // queries
  {
    const auto p = uniform_points(rng, 80);
    const Fpvd f = build_fpvd(p);
    for (int k = 0; k < 10000; ++k) {
      const Point q{4.0 * u(rng) - 1.5, 4.0 * u(rng) - 1.5};
      const int s = f.locate(q, int(rng() % f.size()));
      const double w = f.weight(q);
      if (std::abs(dist(q, f.sites[s]) - w) > 1e-12 * std::max(1.0, w)) ++query_bad;
    }
  }
  // merge against rebuild
  for (int t = 0; t < 200; ++t) {
    const auto p = uniform_points(rng, 4 + t % 50);
    const DirectedLine l = DirectedLine::from_angle(p[rng() % p.size()], 2.0 * kPi * u(rng));
    std::vector<Point> a, b;
    for (const Point& x : p) (l.side(x) > 0 ? a : b).push_back(x);
    if (a.empty() || b.empty()) { --t; continue; }
    const Fpvd m = merge_fpvd(build_fpvd(a), build_fpvd(b));
    const Fpvd r = build_fpvd(p);
    bool ok = m.size() == r.size() && dist(m.root, r.root) <= 1e-12 && std::abs(m.root_weight - r.root_weight) <= 1e-12;
    if (ok) {
      const auto wm = sorted_vertex_weights(m, 1e-12), wr = sorted_vertex_weights(r, 1e-12);
      ok = wm.size() == wr.size();
      for (std::size_t k = 0; ok && k < wm.size(); ++k) ok = std::abs(wm[k] - wr[k]) <= 1e-12;
      std::set<std::pair<double, double>> sa, sb;
      for (const Point& s : m.sites) sa.insert({s.x, s.y});
      for (const Point& s : r.sites) sb.insert({s.x, s.y});
      ok = ok && sa == sb;
    }
    if (!ok) ++merge_bad;
  }
  out.pass = root_bad == 0 && mono_bad == 0 && query_bad == 0 && merge_bad == 0;
  out.note("root vs enclosing disk: 100 diagrams, violations %d, worst %.2e", root_bad, worst_root);
  out.note("weight monotone along root paths: violations %d", mono_bad);
  out.note("10000 farthest-site queries, wrong %d", query_bad);
  out.note("200 merges vs rebuild, differing %d", merge_bad);
  return out;
}

// ---- 7: intersection hulls ---------------------------------------------------

Outcome hull_suite() {
  Outcome out;
  std::mt19937_64 rng(707);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int nest_bad = 0, mono_bad = 0, struct_bad = 0, struct_checked = 0, tile_bad = 0, tiles = 0;
  for (int t = 0; t < 60; ++t) {
    const auto p = uniform_points(rng, 3 + t % 40);
    const Fpvd f = build_fpvd(p);
    const double r0 = f.root_weight;
    // nesting
    for (int k = 0; k < 10; ++k) {
      const double r1 = r0 * (1.0 + 0.3 * u(rng)), r2 = r1 * (1.0 + 0.3 * u(rng));
      const IntersectionHull h1 = intersection_hull(f, r1), h2 = intersection_hull(f, r2);
      for (const Point& x : h1.boundary_samples(64))
        if (!h2.contains(x, 1e-10)) { ++nest_bad; break; }
    }
    // distance between two hulls never grows with the radius
    const auto q = uniform_points(rng, 3 + t % 20);
    std::vector<Point> qs;
    for (const Point& x : q) qs.push_back(x + Point{1.5, 0.3});
    const Fpvd g = build_fpvd(qs);
    const double lo = std::max(r0, g.root_weight);
    double prev = kInf;
    for (int k = 0; k < 50; ++k) {
      const double r = lo * (1.0 + 1.5 * k / 49.0);
      const double d = hull_distance(intersection_hull(f, r), intersection_hull(g, r)).d;
      if (d > prev + 1e-12) ++mono_bad;
      prev = d;
    }
    // arc sequence fixed between consecutive vertex weights
    const auto w = sorted_vertex_weights(f, 1e-9);
    std::vector<double> cuts{r0};
    for (double x : w)
      if (x > r0 + 1e-9) cuts.push_back(x);
    cuts.push_back(cuts.back() * 1.5 + 1.0);
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      const double a = cuts[k], b = cuts[k + 1];
      if (b - a < 1e-7) continue;
      ++struct_checked;
      // cyclic order; the leftmost starting arc may move inside a window
      auto cyc = [&](double r) {
        auto q = intersection_hull(f, r).site_sequence();
        if (!q.empty()) std::rotate(q.begin(), std::min_element(q.begin(), q.end()), q.end());
        return q;
      };
      const auto ref = cyc(a + (b - a) * 0.5);
      for (double s : {0.05, 0.25, 0.75, 0.95})
        if (cyc(a + (b - a) * s) != ref) { ++struct_bad; break; }
    }
    // mini arcs tile the second hull's boundary and carry the right labels
    const double rr = lo * (1.0 + 0.8 * u(rng));
    const IntersectionHull h1 = intersection_hull(f, rr), h2 = intersection_hull(g, rr);
    if (h2.shape == HullShape::Region && h1.shape != HullShape::Empty) {
      ++tiles;
      const auto ma = mini_arcs(h1, h2);
      double total = 0, pieces = 0;
      for (const auto& a : h2.arcs) total += a.geom.span;
      bool ok = true;
      for (const MiniArc& m : ma) {
        pieces += m.piece.span;
        if (m.piece.span > 1e-9)
          ok = ok && region_label(h1, m.piece.mid()) == m.x_label;
      }
      if (!ok || std::abs(total - pieces) > 1e-9) ++tile_bad;
    }
  }
  out.pass = nest_bad == 0 && mono_bad == 0 && struct_bad == 0 && tile_bad == 0;
  out.note("nesting under growth: 600 pairs, violations %d", nest_bad);
  out.note("hull distance over 60 x 50-radius grids, increases %d", mono_bad);
  out.note("arc sequence stable inside %d weight windows, changes %d", struct_checked, struct_bad);
  out.note("mini-arc tiling on %d hull pairs, bad %d", tiles, tile_bad);
  return out;
}

// ---- 8: distant pipeline -----------------------------------------------------

Outcome distant_pipeline() {
  Outcome out;
  std::mt19937_64 rng(808);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int mono_bad = 0, lines_checked = 0, residual_checked = 0, residual_bad = 0, jumps = 0;
  double worst_res = 0;
  for (int t = 0; t < 40; ++t) {
    const auto p = uniform_points(rng, 5 + t % 30);
    const double delta = (0.1 + 0.5 * u(rng)) * diameter(p);
    const DirectedLine l = DirectedLine::from_angle(p[rng() % p.size()], 2.0 * kPi * u(rng));
    auto L = make_distant_line(p, l, 1e-10);
    if (!L) continue;
    ++lines_checked;
    int prev = -1;
    for (int k = 0; k < 50; ++k) {
      const double r = L->med_minus * (0.9 + 1.5 * k / 49.0);
      const int v = int(rl_ftest(*L, r, delta, 1e-9));  // Smaller, Equal, Greater in order
      if (v < prev) ++mono_bad;
      prev = std::max(prev, v);
    }
    const auto f = find_rl(*L, delta, Tolerance{});
    if (f && f->search.r > L->med_minus + 1e-12) {
      ++residual_checked;
      const double e = std::abs(f->probe.d - delta);
      worst_res = std::max(worst_res, e);
      if (e > kResidual) {
        ++residual_bad;
        // a jump: just below r the probe is still above delta, at r it is below
        const double below = field_probe(*L, f->search.r - 1e-9, f->search.r - 1e-9).d;
        if (below > delta + kResidual && f->probe.d < delta - kResidual) ++jumps;
      }
    }
  }
  // two tight clusters held apart by a delta a bit shorter than their gap
  int dom = 0, dom_bad = 0, tag_bad = 0;
  for (int t = 0; t < 24; ++t) {
    gen::Params prm;
    prm.radius = 0.15 + 0.1 * u(rng);
    prm.sep = 2.0 / prm.radius;
    prm.delta = 1.0 + 0.2 * u(rng);
    const gen::Generated g = gen::generate(gen::Kind::TwoClusters, 6 + t % 7, 900 + t, prm);
    const SolveReport r = solve(g.instance.points, g.instance.delta);
    const oracle::PctcResult o = oracle::oracle_pctc(g.instance.points, g.instance.delta);
    ++dom;
    const bool match = close_rel(r.solution.cost, o.cost, kOracleRel) && close_rel(r.solution.companion(), o.companion, kOracleRel);
    if (!match) {
      ++dom_bad;
      out.note("distant instance %d: %.10f/%.10f vs oracle %.10f/%.10f", t, r.solution.cost, r.solution.companion(), o.cost, o.companion);
    }
    if (r.tag != CaseTag::Distant) {
      ++tag_bad;
      out.note("distant instance %d tagged %s (center distance / cost %.3f)", t, case_name(r.tag),
               r.solution.center_distance() / r.solution.cost);
    }
  }
  out.pass = mono_bad == 0 && residual_bad == 0 && dom_bad == 0 && tag_bad == 0;
  out.note("rl_ftest over 50-radius grids on %d lines, order breaks %d", lines_checked, mono_bad);
  out.note("find_rl residual on %d lines above the minus radius, over %.0e: %d, worst %.2e", residual_checked, kResidual,
           residual_bad, worst_res);
  out.note("  of those, %d sit on a discontinuity of the field distance (above delta at r - 1e-9, below at r)", jumps);
  out.note("%d distant-dominant instances, oracle mismatches %d, wrong tags %d", dom, dom_bad, tag_bad);
  return out;
}

// ---- 9: scaling --------------------------------------------------------------

Outcome scaling() {
  Outcome out;
  bench::Suite s;
  s.kinds = {gen::Kind::Uniform, gen::Kind::TwoClusters};
  s.ns = {32, 64, 128, 256, 512};
  s.reps = 1;
  s.params.delta = 0.25;
  s.params.sep = 3.0;
  s.cfg.angle_count = 32;
  s.cfg.m_grid = 4;
  const auto rows = bench::run(s, [](const bench::Row& r, int, const SolveReport& rep) {
    std::printf("    .. %s n=%d %.1f s\n", gen::kind_name(r.kind), r.n, rep.seconds);
    std::fflush(stdout);
  });
  for (const bench::Row& r : rows)
    out.note("%s n=%d: %.2f s, evals %.0f, winners %d/%d/%d", gen::kind_name(r.kind), r.n, r.median_seconds,
             r.median_evaluations, r.tags[0], r.tags[1], r.tags[2]);
  for (gen::Kind k : s.kinds) {
    const double slope = bench::loglog_slope(rows, k);
    out.note("%s log-log slope %.3f (limit %.1f)", gen::kind_name(k), slope, kSlopeMax);
    if (!(slope <= kSlopeMax)) out.pass = false;
  }
  out.note("configuration: angle_count 32, m_grid 4, delta 0.25");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int k = 1; k < argc; ++k) only.insert(std::atoi(argv[k]));
  auto want = [&](int k) { return only.empty() || only.count(k); };

  std::deque<ContextCase> contexts;
  std::vector<double> ratios;
  if (want(4) || want(5)) contexts = matrix_contexts(120);

  struct Item { int id; const char* name; std::function<Outcome()> run; };
  const std::vector<Item> items{
      {1, "global oracle equivalence", global_oracle},
      {2, "restricted solver vs oracle, tightness", restricted_oracle},
      {3, "delta = 0 and large-delta endpoints", endpoints},
      {4, "matrix search r_ml and discard certificates", [&] { return matrix_correctness(contexts, ratios); }},
      {5, "matrix search evaluation budget", [&] {
         if (ratios.empty())
           for (const auto& c : contexts) {
             SplitCache cache;
             MatrixStats st;
             compute_r_ml(c.ctx, cache, &st);
             ratios.push_back(double(st.evaluations) / budget_unit(c.ctx.np(), c.ctx.nq()));
           }
         return matrix_budget(contexts, ratios);
       }},
      {6, "farthest-point diagram invariants", fpvd_suite},
      {7, "intersection hull invariants", hull_suite},
      {8, "distant pipeline", distant_pipeline},
      {9, "end-to-end scaling", scaling},
  };
  int failed = 0;
  for (const Item& it : items) {
    if (!want(it.id)) continue;
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = it.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note("exception: %s", e.what());
    }
    const double sec = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("[%s] criterion %d: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", it.id, it.name, sec);
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
