// pctc command line: solve, verify, gen, bench, oracle, render.
//
// exit codes: 0 ok, 1 parse or config error, 2 invariant violation

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pctc/bench.hpp"
#include "pctc/generate.hpp"
#include "pctc/io.hpp"
#include "pctc/oracle.hpp"
#include "pctc/solver.hpp"
#include "pctc/svg.hpp"

namespace {

using namespace pctc;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << text;
}

const std::map<std::string, CaseFilter> kFilters{
    {"all", CaseFilter::All}, {"nearby", CaseFilter::Nearby}, {"distant", CaseFilter::Distant}, {"far", CaseFilter::Far}};

// Flags shared by every verb that solves.
struct ConfigFlags {
  SolveConfig cfg;
  std::string filter = "all";

  void attach(CLI::App* app) {
    app->add_option("--angle-count", cfg.angle_count, "directions per sweep")->capture_default_str();
    app->add_option("--m-grid", cfg.m_grid, "anchor grid size")->capture_default_str();
    app->add_option("--eps-geom", cfg.tol.eps_geom, "predicate tolerance")->capture_default_str();
    app->add_option("--eps-opt", cfg.tol.eps_opt, "optimisation tolerance")->capture_default_str();
    app->add_option("--eps-eq", cfg.tol.eps_eq, "equality band for costs")->capture_default_str();
    app->add_option("--seed", cfg.seed, "seed for randomised steps")->capture_default_str();
    app->add_option("--case", filter, "restrict to one case")->check(CLI::IsMember({"all", "nearby", "distant", "far"}));
    app->add_flag("--oracle-check", cfg.oracle_check, "compare against the exhaustive oracle (n <= 12)");
    app->add_option("--svg", cfg.svg_path, "also write a picture here");
  }

  const SolveConfig& resolve() {
    cfg.filter = kFilters.at(filter);
    if (cfg.angle_count < 4) throw ConfigError("--angle-count must be >= 4");
    if (cfg.m_grid < 1) throw ConfigError("--m-grid must be >= 1");
    if (!cfg.tol.valid()) throw ConfigError("tolerances must satisfy 0 < eps-geom <= eps-opt <= eps-eq < 1");
    return cfg;
  }
};

void dump(const SolveReport& r, std::ostream& os) {
  os << "case " << case_name(r.tag) << " cost " << io::format_double(r.solution.cost) << " companion "
     << io::format_double(r.solution.companion()) << "\n";
  os << "residuals coverage " << r.verification.coverage << " pcc " << r.verification.pcc << "\n";
  for (int k = 0; k < 3; ++k) {
    const Candidate& c = r.candidates[k];
    os << "  " << case_name(CaseTag(k)) << ": ";
    if (c.present)
      os << "cost " << c.solution.cost << " companion " << c.solution.companion();
    else
      os << "none";
    os << " (" << c.seconds << " s)\n";
  }
  os << "  nearby anchors " << r.nearby.anchors << " contexts " << r.nearby.contexts << " evaluations "
     << r.nearby.evaluations << " mixed " << r.nearby.mixed << " fallbacks " << r.nearby.fallbacks
     << " budget " << r.nearby.max_budget_ratio << "\n";
  os << "  distant lines " << r.distant.distinct << " ftests " << r.distant.ftests << " events " << r.distant.events
     << " jumps " << r.distant.jumps << (r.distant.early_exit ? " early-exit" : "") << "\n";
  os << "  far lines " << r.far.distinct << " solves " << r.far.solves << "\n";
  os << "  restricted cache " << r.cache_entries << " entries " << r.cache_hits << " hits\n";
  if (r.oracle)
    os << "  oracle cost " << r.oracle->cost << " companion " << r.oracle->companion
       << (r.oracle_agrees ? " agrees" : " DISAGREES") << "\n";
  os << "  total " << r.seconds << " s\n";
}

int cmd_solve(const std::string& in, const std::string& out, bool perturb, bool quiet, ConfigFlags& flags) {
  const SolveConfig& cfg = flags.resolve();
  Instance inst = io::parse_instance(slurp(in));
  if (inst.points.empty()) throw ConfigError("instance has no points");
  if (perturb && enforce_general_position(inst.points)) std::cerr << "general position: jitter applied\n";
  const SolveReport r = solve(inst.points, inst.delta, cfg);
  emit(out, io::write_solution(r));
  if (!cfg.svg_path.empty()) emit(cfg.svg_path, svg::render_svg(inst.points, inst.delta, r));
  if (!quiet) dump(r, std::cerr);
  const double tol = 1e-9 * std::max(1.0, r.solution.cost);
  if (!r.verification.ok(tol)) {
    dump(r, std::cerr);
    throw InvariantError("solution fails its own verification");
  }
  if (!r.oracle_agrees) {
    dump(r, std::cerr);
    throw InvariantError("solution disagrees with the oracle");
  }
  return 0;
}

int cmd_verify(const std::string& in, const std::string& sol, double band) {
  const Instance inst = io::parse_instance(slurp(in));
  const io::SolutionFile f = io::parse_solution(slurp(sol));
  const Verification v = verify_solution(inst.points, inst.delta, f.d1, f.d2);
  std::cout << "coverage " << io::format_double(v.coverage) << "\npcc " << io::format_double(v.pcc) << "\n";
  bool ok = true;
  auto agree = [&](const char* what, const std::optional<double>& rec, double now) {
    if (!rec) return;
    if (std::abs(*rec - now) > 1e-12) {
      std::cerr << what << " recorded " << *rec << " recomputed " << now << "\n";
      ok = false;
    }
  };
  agree("coverage", f.coverage, v.coverage);
  agree("pcc", f.pcc, v.pcc);
  if (std::abs(f.cost - std::max(f.d1.radius, f.d2.radius)) > 1e-12 * std::max(1.0, f.cost)) {
    std::cerr << "cost is not the larger radius\n";
    ok = false;
  }
  const double tol = band * std::max(1.0, f.cost);
  if (v.coverage > tol) { std::cerr << "points left uncovered\n"; ok = false; }
  if (v.pcc > tol) { std::cerr << "centers farther apart than delta\n"; ok = false; }
  if (!ok) throw InvariantError("verification failed");
  std::cout << "ok\n";
  return 0;
}

int cmd_gen(const std::string& kind, int n, std::uint64_t seed, const gen::Params& prm, const std::string& out) {
  const auto k = gen::parse_kind(kind);
  if (!k) throw ConfigError("unknown generator " + kind);
  if (n < 1) throw ConfigError("--n must be >= 1");
  if (prm.delta < 0.0) throw ConfigError("--delta must be non-negative");
  const gen::Generated g = gen::generate(*k, n, seed, prm);
  if (!g.log.empty()) std::cerr << g.log << "\n";
  std::string text = "# " + std::string(gen::kind_name(*k)) + " n=" + std::to_string(n) + " seed=" + std::to_string(seed) + "\n";
  if (g.instance.perturbed) text += "# " + g.log + "\n";
  emit(out, text + io::write_instance(g.instance));
  return 0;
}

int cmd_bench(const std::vector<std::string>& kinds, const std::vector<int>& ns, int reps, std::uint64_t seed,
              const gen::Params& prm, bool no_time, ConfigFlags& flags) {
  bench::Suite s;
  s.cfg = flags.resolve();
  for (const auto& k : kinds) {
    const auto kk = gen::parse_kind(k);
    if (!kk) throw ConfigError("unknown generator " + k);
    s.kinds.push_back(*kk);
  }
  for (int n : ns)
    if (n < 1) throw ConfigError("sizes must be >= 1");
  s.ns = ns;
  s.reps = reps;
  s.seed = seed;
  s.params = prm;
  const auto rows = bench::run(s, [](const bench::Row& r, int rep, const SolveReport& rr) {
    std::cerr << gen::kind_name(r.kind) << " n=" << r.n << " rep " << rep << ": " << rr.seconds << " s\n";
  });
  std::cout << bench::format_table(rows, !no_time);
  if (!no_time)
    for (gen::Kind k : s.kinds) std::cout << "slope " << gen::kind_name(k) << " " << bench::loglog_slope(rows, k) << "\n";
  return 0;
}

int cmd_oracle(const std::string& in, const std::string& which) {
  const Instance inst = io::parse_instance(slurp(in));
  if (inst.points.empty()) throw ConfigError("instance has no points");
  try {
    if (which == "2center") {
      const auto r = oracle::oracle_2center(inst.points);
      std::cout << "cost " << io::format_double(r.cost) << "\ncenter_distance " << io::format_double(r.center_distance) << "\n";
    } else {
      const auto r = oracle::oracle_pctc(inst.points, inst.delta);
      std::cout << "cost " << io::format_double(r.cost) << "\ncompanion " << io::format_double(r.companion) << "\nfirst";
      for (std::size_t k = 0; k < r.first.size(); ++k)
        if (r.first[k]) std::cout << " " << k;
      std::cout << "\n";
    }
  } catch (const oracle::SizeLimit& e) {
    throw ConfigError(e.what());
  }
  return 0;
}

int cmd_render(const std::string& in, const std::string& sol, const std::string& out, bool overlay, ConfigFlags& flags) {
  const Instance inst = io::parse_instance(slurp(in));
  if (inst.points.empty()) throw ConfigError("instance has no points");
  SolveReport r;
  if (sol.empty()) {
    r = solve(inst.points, inst.delta, flags.resolve());
  } else {
    const io::SolutionFile f = io::parse_solution(slurp(sol));
    r.solution.d1 = f.d1;
    r.solution.d2 = f.d2;
    r.solution.cost = f.cost;
    r.tag = f.tag == "far" ? CaseTag::Far : f.tag == "distant" ? CaseTag::Distant : CaseTag::Nearby;
  }
  svg::Options opt;
  opt.fpvd_overlay = overlay;
  emit(out, svg::render_svg(inst.points, inst.delta, r, opt));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"proximity-connected two-center solver"};
  app.require_subcommand(1);

  ConfigFlags solve_flags, bench_flags, render_flags;
  std::string in, out, sol;
  bool perturb = false, quiet = false;
  auto* s = app.add_subcommand("solve", "solve an instance file");
  s->add_option("instance", in, "instance file, - for stdin")->required();
  s->add_option("-o,--output", out, "solution file (default stdout)");
  s->add_flag("--general-position", perturb, "jitter coincident or cocircular points first");
  s->add_flag("-q,--quiet", quiet, "no report on stderr");
  solve_flags.attach(s);

  double band = 1e-9;
  auto* v = app.add_subcommand("verify", "recompute the residuals of a solution");
  v->add_option("instance", in)->required();
  v->add_option("solution", sol)->required();
  v->add_option("--band", band, "relative slack for coverage and distance")->capture_default_str();

  std::string kind = "uniform";
  int n = 16;
  std::uint64_t seed = kDefaultSeed;
  gen::Params prm;
  auto* g = app.add_subcommand("gen", "generate an instance");
  g->add_option("--kind", kind)->check(CLI::IsMember({"uniform", "two_clusters", "circle", "collinear", "cocircular_stress"}))
      ->capture_default_str();
  g->add_option("--n", n)->capture_default_str();
  g->add_option("--seed", seed)->capture_default_str();
  g->add_option("--delta", prm.delta)->capture_default_str();
  g->add_option("--sep", prm.sep, "two_clusters separation in cluster radii")->capture_default_str();
  g->add_option("--radius", prm.radius)->capture_default_str();
  g->add_option("-o,--output", out);

  std::vector<std::string> kinds{"uniform", "two_clusters"};
  std::vector<int> ns{16, 32, 64, 128};
  int reps = 3;
  bool no_time = false;
  gen::Params bprm;
  std::uint64_t bseed = kDefaultSeed;
  auto* b = app.add_subcommand("bench", "doubling-n benchmark");
  b->add_option("--kinds", kinds)->delimiter(',');
  b->add_option("--ns", ns)->delimiter(',');
  b->add_option("--reps", reps)->capture_default_str();
  b->add_option("--suite-seed", bseed)->capture_default_str();
  b->add_option("--delta", bprm.delta)->capture_default_str();
  b->add_option("--sep", bprm.sep)->capture_default_str();
  b->add_flag("--no-time", no_time, "leave wall time out of the table");
  bench_flags.attach(b);

  std::string which = "pctc";
  auto* o = app.add_subcommand("oracle", "run the exhaustive oracle on a small instance");
  o->add_option("instance", in)->required();
  o->add_option("--which", which)->check(CLI::IsMember({"pctc", "2center"}))->capture_default_str();

  bool overlay = false;
  auto* r = app.add_subcommand("render", "draw an instance and its solution as SVG");
  r->add_option("instance", in)->required();
  r->add_option("--solution", sol, "solution file; solved on the fly when absent");
  r->add_option("-o,--output", out);
  r->add_flag("--fpvd", overlay, "overlay the farthest-point diagram");
  render_flags.attach(r);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*s) return cmd_solve(in, out, perturb, quiet, solve_flags);
    if (*v) return cmd_verify(in, sol, band);
    if (*g) return cmd_gen(kind, n, seed, prm, out);
    if (*b) return cmd_bench(kinds, ns, reps, bseed, bprm, no_time, bench_flags);
    if (*o) return cmd_oracle(in, which);
    if (*r) return cmd_render(in, sol, out, overlay, render_flags);
  } catch (const io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const GeometryError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
