#pragma once

// Nearby case: both optimal disks share a point m. For each anchor m and
// directed line through it the bipartitions form a matrix indexed by how many
// left-side (p) and right-side (q) points sit on the positive side.

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fpvd.hpp"
#include "geom.hpp"
#include "restricted.hpp"

namespace pctc {

struct NearbyConfig {
  int angle_count = 360;
  int m_grid = 16;
  Tolerance tol;
  bool keep_records = false;  // store discard records for audits
};

// Grid anchors strictly inside the hull plus its centroid.
inline std::vector<Point> build_m_set(std::span<const Point> hull, int g, double eps = 1e-10) {
  std::vector<Point> out;
  Point c{0.0, 0.0};
  double area2 = 0.0;
  const std::size_t h = hull.size();
  if (h == 0) return out;
  for (std::size_t k = 0; k < h; ++k) {
    const Point a = hull[k], b = hull[(k + 1) % h];
    const double w = cross(a, b);
    area2 += w;
    c = c + (a + b) * w;
  }
  if (h >= 3 && std::abs(area2) > eps * eps) {
    c = c / (3.0 * area2);
  } else {
    c = {0.0, 0.0};
    for (const Point& p : hull) c = c + p;
    c = c / double(h);
  }
  if (h < 3) return {c};

  double lx = kInf, ly = kInf, hx = -kInf, hy = -kInf;
  for (const Point& p : hull) {
    lx = std::min(lx, p.x); ly = std::min(ly, p.y);
    hx = std::max(hx, p.x); hy = std::max(hy, p.y);
  }
  auto inside = [&](Point q) {
    for (std::size_t k = 0; k < h; ++k) {
      const Point a = hull[k], b = hull[(k + 1) % h];
      if (cross(b - a, q - a) <= eps * std::max(1.0, dist(a, b))) return false;
    }
    return true;
  };
  for (int a = 0; a < g; ++a)
    for (int b = 0; b < g; ++b) {
      const Point q{lx + (hx - lx) * (a + 0.5) / g, ly + (hy - ly) * (b + 0.5) / g};
      if (inside(q)) out.push_back(q);
    }
  out.push_back(c);
  return out;
}

inline std::vector<DirectedLine> build_direction_set(Point m, int count) {
  std::vector<DirectedLine> out;
  out.reserve(std::max(count, 0));
  for (int k = 0; k < count; ++k) out.push_back(DirectedLine::from_angle(m, 2.0 * kPi * k / count));
  return out;
}

struct TypedPoint {
  bool q = false;  // q-type (right of the line) or p-type
  int pos = 0;     // 0-based position in its sequence
};

struct AnchorContext {
  const std::vector<Point>* pts = nullptr;
  Point m;
  DirectedLine line;
  double delta = 0.0;
  Tolerance tol;
  std::vector<int> p_ids, q_ids;  // ids into *pts, in angular order
  std::vector<TypedPoint> type_of;
  mutable std::optional<PrefixFpvds> px, py;

  int np() const { return int(p_ids.size()); }
  int nq() const { return int(q_ids.size()); }
  int rows() const { return np() + 1; }
  int cols() const { return nq() + 1; }

  SplitMask positive_mask(int i, int j) const {
    SplitMask m = make_mask(pts->size());
    for (int k = 0; k < i; ++k) mask_set(m, p_ids[k]);
    for (int k = 0; k < j; ++k) mask_set(m, q_ids[k]);
    return m;
  }
  // Positive: p_1..p_i and q_1..q_j. Negative: the rest, p's first.
  std::vector<int> positive_ids(int i, int j) const {
    std::vector<int> v(p_ids.begin(), p_ids.begin() + i);
    v.insert(v.end(), q_ids.begin(), q_ids.begin() + j);
    return v;
  }
  std::vector<int> negative_ids(int i, int j) const {
    std::vector<int> v(p_ids.begin() + i, p_ids.end());
    v.insert(v.end(), q_ids.begin() + j, q_ids.end());
    return v;
  }
  std::vector<Point> gather(const std::vector<int>& ids) const {
    std::vector<Point> v;
    v.reserve(ids.size());
    for (int k : ids) v.push_back((*pts)[k]);
    return v;
  }

  void ensure_prefix() const {
    if (px) return;
    px.emplace(prefix_fpvds(gather(p_ids)));
    py.emplace(prefix_fpvds(gather(q_ids)));
  }
};

inline AnchorContext build_anchor_context(const std::vector<Point>& pts, Point m, const DirectedLine& line,
                                          double delta, const Tolerance& tol = {}) {
  AnchorContext c;
  c.pts = &pts;
  c.m = m;
  c.line = line;
  c.delta = delta;
  c.tol = tol;
  struct Key { double mag, d; int id; };
  std::vector<Key> left, right;
  for (int k = 0; k < int(pts.size()); ++k) {
    const Point v = pts[k] - m;
    const double s = cross(line.direction, v);
    const double ang = std::atan2(s, dot(line.direction, v));
    (s >= -tol.eps_geom ? left : right).push_back({std::abs(ang), norm(v), k});
  }
  auto by = [](const Key& a, const Key& b) {
    if (a.mag != b.mag) return a.mag < b.mag;
    if (a.d != b.d) return a.d < b.d;
    return a.id < b.id;
  };
  std::sort(left.begin(), left.end(), by);
  std::sort(right.begin(), right.end(), by);
  c.type_of.assign(pts.size(), {});
  for (const Key& k : left) {
    c.type_of[k.id] = {false, int(c.p_ids.size())};
    c.p_ids.push_back(k.id);
  }
  for (const Key& k : right) {
    c.type_of[k.id] = {true, int(c.q_ids.size())};
    c.q_ids.push_back(k.id);
  }
  return c;
}

struct CellEvaluation {
  int i = 0, j = 0;
  Disk negative, positive;
  double value = 0.0;       // radius of the positive disk
  double neg_radius = 0.0;
  double cost = 0.0;
  bool valid = false;
  bool critical = false;    // positive disk is not the MED of its side
  bool neg_med = false;     // negative disk is the MED of its side
  std::vector<TypedPoint> dom_neg, dom_pos;
  PartitionSolution sol;    // d1 negative, d2 positive
};

namespace detail {

inline std::shared_ptr<const Fpvd> union_fpvd(const std::shared_ptr<const Fpvd>& a,
                                              const std::shared_ptr<const Fpvd>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::make_shared<const Fpvd>(merge_fpvd(*a, *b));
}

}  // namespace detail

// Restricted solve of cell (i, j) with diagrams merged from the prefixes.
inline const SplitRecord& cell_record(const AnchorContext& c, int i, int j, SplitCache& cache) {
  return cache.get(c.positive_mask(i, j), [&](SplitRecord& rec) {
    const auto neg = c.negative_ids(i, j), pos = c.positive_ids(i, j);
    const auto pn = c.gather(neg), pp = c.gather(pos);
    std::shared_ptr<const Fpvd> fn, fp;
    if (!pn.empty() && !pp.empty()) {
      c.ensure_prefix();
      fn = detail::union_fpvd(c.px->backward[i], c.py->backward[j]);
      fp = detail::union_fpvd(c.px->forward[i], c.py->forward[j]);
    }
    rec.sol = solve_restricted(pn, pp, c.delta, c.tol, fn.get(), fp.get(), &cache.stats);
    for (int k : rec.sol.dominating1) rec.dom1.push_back(neg[k]);
    for (int k : rec.sol.dominating2) rec.dom2.push_back(pos[k]);
    rec.med1 = pn.empty() ? 0.0 : (fn ? fn->root_weight : med(pn).radius);
    rec.med2 = pp.empty() ? 0.0 : (fp ? fp->root_weight : med(pp).radius);
  });
}

inline CellEvaluation classify_record(const AnchorContext& c, int i, int j, const SplitRecord& rec) {
  const double eps = c.tol.eps_eq;
  CellEvaluation ev;
  ev.i = i;
  ev.j = j;
  ev.sol = rec.sol;
  ev.negative = rec.sol.d1;
  ev.positive = rec.sol.d2;
  ev.value = ev.positive.radius;
  ev.neg_radius = ev.negative.radius;
  ev.cost = std::max(ev.value, ev.neg_radius);
  ev.valid = ev.value >= ev.neg_radius - eps;
  ev.critical = ev.value > rec.med2 + eps;
  ev.neg_med = ev.neg_radius <= rec.med1 + eps;
  for (int k : rec.dom1) ev.dom_neg.push_back(c.type_of[k]);
  for (int k : rec.dom2) ev.dom_pos.push_back(c.type_of[k]);
  return ev;
}

inline CellEvaluation evaluate_cell(const AnchorContext& c, int i, int j, SplitCache& cache) {
  return classify_record(c, i, j, cell_record(c, i, j, cache));
}

enum class Certificate {
  Prop5Monotone,    // non-critical cell, everything down-right is no smaller
  NonValidRow,      // negative MED ends the row
  Prop6Row,         // both positive dominators p-type
  Prop6Column,      // both negative dominators q-type
  Prop6RowJump,
  Prop6ColumnJump,
  Thm1Above,
  Thm1Below,
  Thm1Front,
};

inline const char* certificate_name(Certificate c) {
  switch (c) {
    case Certificate::Prop5Monotone: return "prop5-monotone";
    case Certificate::NonValidRow: return "non-valid-row";
    case Certificate::Prop6Row: return "prop6-row";
    case Certificate::Prop6Column: return "prop6-column";
    case Certificate::Prop6RowJump: return "prop6-row-jump";
    case Certificate::Prop6ColumnJump: return "prop6-column-jump";
    case Certificate::Thm1Above: return "thm1-above";
    case Certificate::Thm1Below: return "thm1-below";
    case Certificate::Thm1Front: return "thm1-front";
  }
  return "?";
}

// Discarded cells: rows i0..i1 by columns j0..j1 (a quadrant when i1, j1 are
// the matrix bounds). Every cell inside costs at least `bound`.
struct DiscardRecord {
  Certificate cert;
  int i0, i1, j0, j1;
  double bound;
  int from_i, from_j;
};

enum class DiscardCase { Above, Below, Front, Mixed };

struct MatrixStats {
  long evaluations = 0;
  long deposits = 0;
  long nonvalid_not_med = 0;
  long mixed = 0;
  long fallback_evaluations = 0;
  long tr_marks = 0, bl_marks = 0, doubly_marked = 0;
  long dm_evaluations = 0;
};

class MatrixContext {
 public:
  MatrixContext(const AnchorContext& c, SplitCache& cache, bool keep_records = false)
      : c_(c), cache_(cache), keep_(keep_records), rows_(c.rows()), cols_(c.cols()),
        limit_(rows_, cols_), bits_(std::size_t(rows_) * cols_, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const MatrixStats& stats() const { return st_; }
  const std::vector<DiscardRecord>& records() const { return rec_; }
  const std::unordered_map<int, CellEvaluation>& evaluations() const { return ev_; }
  const std::vector<double>& outbox() const { return outbox_; }

  bool discarded(int i, int j) const { return j >= limit_[i] || (bits_[at(i, j)] & kDiscard); }
  bool evaluated(int i, int j) const { return ev_.count(at(i, j)) > 0; }
  bool marked_tr(int i, int j) const { return bits_[at(i, j)] & kMarkTr; }
  bool marked_bl(int i, int j) const { return bits_[at(i, j)] & kMarkBl; }
  bool resolved(int i, int j) const { return evaluated(i, j) || discarded(i, j); }

  const CellEvaluation& evaluate(int i, int j) {
    auto it = ev_.find(at(i, j));
    if (it != ev_.end()) return it->second;
    ++st_.evaluations;
    return ev_.emplace(at(i, j), evaluate_cell(c_, i, j, cache_)).first->second;
  }

  // Top-right search, or bottom-left when transposed (p and q swap roles).
  void initial_search(bool transposed) {
    const int R = transposed ? cols_ : rows_;
    const int C = transposed ? rows_ : cols_;
    auto act = [&](int a, int b) { return transposed ? std::pair{b, a} : std::pair{a, b}; };
    auto own_mark = [&](int a, int b) {
      auto [i, j] = act(a, b);
      return transposed ? marked_bl(i, j) : marked_tr(i, j);
    };
    // Discard a 1-D run in view coordinates.
    auto drop = [&](int a0, int a1, int b0, int b1, Certificate cert, double bound, int fa, int fb) {
      if (a0 > a1 || b0 > b1) return;
      auto [i0, j0] = act(a0, b0);
      auto [i1, j1] = act(a1, b1);
      auto [fi, fj] = act(fa, fb);
      discard_rect(i0, i1, j0, j1, cert, bound, fi, fj);
    };
    auto vp = [&](const std::vector<TypedPoint>& d) {  // positions of view-p dominators
      std::vector<int> v;
      for (const TypedPoint& t : d) if (t.q == transposed) v.push_back(t.pos);
      return v;
    };
    auto vq = [&](const std::vector<TypedPoint>& d) {
      std::vector<int> v;
      for (const TypedPoint& t : d) if (t.q != transposed) v.push_back(t.pos);
      return v;
    };

    int J = C - 1;
    for (int I = 0; I < R && J >= 0; ++I) {
      int b = J;
      while (b >= 0) {
        auto [i, j] = act(I, b);
        if (discarded(i, j) || own_mark(I, b)) { --b; continue; }
        const CellEvaluation& ev = evaluate(i, j);
        if (ev.valid && !ev.critical) {
          discard_quadrant(i, j, ev.value);
          J = std::min(J, b - 1);
          --b;
          continue;
        }
        if (!ev.valid) {
          outbox_.push_back(ev.neg_radius);
          ++st_.deposits;
          if (ev.neg_med) {
            drop(I, I, 0, b - 1, Certificate::NonValidRow, ev.neg_radius, I, b);
            break;
          }
          ++st_.nonvalid_not_med;
          --b;
          continue;
        }
        // valid and critical
        const auto pos_q = vq(ev.dom_pos);
        const auto neg_p = vp(ev.dom_neg);
        const bool row_all = pos_q.empty();
        const bool col_all = neg_p.empty();
        if (row_all) drop(I, I, 0, b - 1, Certificate::Prop6Row, ev.value, I, b);
        else drop(I, I, *std::max_element(pos_q.begin(), pos_q.end()) + 1, b - 1, Certificate::Prop6RowJump,
                  ev.value, I, b);
        int s = R - 1;
        if (col_all) {
          drop(I + 1, R - 1, b, b, Certificate::Prop6Column, ev.value, I, b);
        } else {
          s = *std::min_element(neg_p.begin(), neg_p.end());
          drop(I + 1, std::min(s, R - 1), b, b, Certificate::Prop6ColumnJump, ev.value, I, b);
        }
        if (!row_all && !col_all) {
          for (int a = s + 1; a < R; ++a) {
            auto [mi, mj] = act(a, b);
            if (discarded(mi, mj)) continue;
            bits_[at(mi, mj)] |= transposed ? kMarkBl : kMarkTr;
            ++(transposed ? st_.bl_marks : st_.tr_marks);
          }
        }
        if (row_all) break;
        b = *std::max_element(pos_q.begin(), pos_q.end());
      }
    }
  }

  DiscardCase classify(const CellEvaluation& ev) const {
    const double eps = c_.tol.eps_eq;
    if (ev.neg_med && ev.neg_radius >= ev.value - eps) return DiscardCase::Above;
    if (!ev.critical && ev.value >= ev.neg_radius - eps) return DiscardCase::Below;  // and Front
    bool all_p = true, all_q = true;
    for (const TypedPoint& t : ev.dom_neg) (t.q ? all_p : all_q) = false;
    if (ev.dom_neg.empty()) return DiscardCase::Mixed;
    if (all_p) return DiscardCase::Front;
    if (all_q) return DiscardCase::Below;
    return DiscardCase::Mixed;
  }

  void search_dm() {
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (marked_tr(i, j) && marked_bl(i, j) && !resolved(i, j)) ++st_.doubly_marked;
    const long before = st_.evaluations;
    search_dm(0, rows_ - 1);
    st_.dm_evaluations = st_.evaluations - before;
    // Anything still open is evaluated directly.
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!resolved(i, j)) {
          ++st_.fallback_evaluations;
          evaluate(i, j);
        }
  }

  void run() {
    initial_search(false);
    initial_search(true);
    search_dm();
  }

  // Best evaluated cell under the solution ordering.
  // Smallest value among evaluated valid cells.
  std::optional<double> min_valid() const {
    std::optional<double> v;
    for (const auto& [k, ev] : ev_)
      if (ev.valid && (!v || ev.value < *v)) v = ev.value;
    return v;
  }

  const CellEvaluation* best() const {
    const CellEvaluation* b = nullptr;
    for (const auto& [k, ev] : ev_)
      if (!b || better_solution(ev.sol, b->sol, c_.tol.eps_eq)) b = &ev;
    return b;
  }

 private:
  static constexpr unsigned char kDiscard = 1, kMarkTr = 2, kMarkBl = 4;

  int at(int i, int j) const { return i * cols_ + j; }

  void log(Certificate cert, int i0, int i1, int j0, int j1, double bound, int fi, int fj) {
    if (keep_) rec_.push_back({cert, i0, i1, j0, j1, bound, fi, fj});
  }

  void discard_quadrant(int i, int j, double bound) {
    for (int r = i; r < rows_; ++r) limit_[r] = std::min(limit_[r], j);
    log(Certificate::Prop5Monotone, i, rows_ - 1, j, cols_ - 1, bound, i, j);
  }

  void discard_rect(int i0, int i1, int j0, int j1, Certificate cert, double bound, int fi, int fj) {
    if (i0 > i1) std::swap(i0, i1);
    if (j0 > j1) std::swap(j0, j1);
    i0 = std::max(i0, 0); j0 = std::max(j0, 0);
    i1 = std::min(i1, rows_ - 1); j1 = std::min(j1, cols_ - 1);
    if (i0 > i1 || j0 > j1) return;
    for (int r = i0; r <= i1; ++r)
      for (int q = j0; q <= std::min(j1, limit_[r] - 1); ++q) bits_[at(r, q)] |= kDiscard;
    log(cert, i0, i1, j0, j1, bound, fi, fj);
  }

  void apply_case(const CellEvaluation& ev, DiscardCase k) {
    const int i = ev.i, j = ev.j;
    switch (k) {
      case DiscardCase::Above:
        discard_rect(0, i, j, j, Certificate::Thm1Above, ev.cost, i, j);
        break;
      case DiscardCase::Below:
        discard_rect(i, rows_ - 1, j, j, Certificate::Thm1Below, ev.cost, i, j);
        if (!ev.critical && ev.value >= ev.neg_radius - c_.tol.eps_eq)
          discard_rect(i, i, j, cols_ - 1, Certificate::Thm1Front, ev.cost, i, j);
        break;
      case DiscardCase::Front:
        discard_rect(i, i, j, cols_ - 1, Certificate::Thm1Front, ev.cost, i, j);
        break;
      case DiscardCase::Mixed: {
        ++st_.mixed;
        if (!ev.valid || !ev.critical) break;
        // Only what the row and column jumps certify.
        int t = -1, s = rows_ - 1;
        for (const TypedPoint& d : ev.dom_pos) if (d.q) t = std::max(t, d.pos);
        bool any_p = false;
        for (const TypedPoint& d : ev.dom_neg)
          if (!d.q) { s = any_p ? std::min(s, d.pos) : d.pos; any_p = true; }
        discard_rect(i, i, t + 1, j - 1, t < 0 ? Certificate::Prop6Row : Certificate::Prop6RowJump, ev.value, i, j);
        discard_rect(i + 1, s, j, j, any_p ? Certificate::Prop6ColumnJump : Certificate::Prop6Column, ev.value, i, j);
        break;
      }
    }
  }

  bool open_cells(int a, int b) const {
    for (int i = a; i <= b; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!resolved(i, j)) return true;
    return false;
  }

  void visit(int i, int j, bool* front) {
    const CellEvaluation& ev = evaluate(i, j);
    const DiscardCase k = classify(ev);
    apply_case(ev, k);
    *front = k == DiscardCase::Front || k == DiscardCase::Mixed;
  }

  void sweep(int a, int b) {
    int I = a, J = 0;
    while (I <= b) {
      bool front = false;
      if (!resolved(I, J)) visit(I, J, &front);
      if (!front && J < cols_ - 1) ++J;
      else ++I;
    }
  }

  void search_dm(int lo, int hi) {
    if (lo > hi) return;
    int top = lo + 1, bottom = hi;
    while (top <= bottom) {
      const int d = top + (bottom - top + 1) / 2;
      sweep(d, bottom);
      if (open_cells(d, bottom)) search_dm(d, bottom);
      bottom = d - 1;
    }
    for (int j = 0; j < cols_; ++j) {
      bool front = false;
      if (!resolved(lo, j)) visit(lo, j, &front);
    }
  }

  const AnchorContext& c_;
  SplitCache& cache_;
  bool keep_;
  int rows_, cols_;
  std::vector<int> limit_;                     // row r: columns >= limit_[r] are discarded
  std::vector<unsigned char> bits_;
  std::unordered_map<int, CellEvaluation> ev_;
  std::vector<DiscardRecord> rec_;
  std::vector<double> outbox_;
  MatrixStats st_;
};

// Smallest valid value found by the matrix search, merged with the radii the
// opposite direction deposited for this one.
inline std::optional<double> compute_r_ml(const AnchorContext& c, SplitCache& cache, MatrixStats* st = nullptr,
                                          std::span<const double> opposite = {}) {
  MatrixContext mx(c, cache);
  mx.run();
  if (st) *st = mx.stats();
  std::optional<double> r = mx.min_valid();
  for (double d : opposite)
    if (!r || d < *r) r = d;
  return r;
}

struct Reconstruction {
  std::optional<PartitionSolution> solution;
  long mbar_evaluations = 0;
  long solves = 0;
  bool matched = false;
};

// Staircase over MED radii of the positive side, keeping cells at cost r_ml.
inline Reconstruction reconstruct_bos(const AnchorContext& c, double r_ml, SplitCache& cache,
                                      const std::optional<PartitionSolution>& initial = std::nullopt) {
  Reconstruction out;
  out.solution = initial;
  const double eps = c.tol.eps_eq;
  int i = 0, j = c.nq();
  while (i <= c.np() && j >= 0) {
    const auto pos = c.gather(c.positive_ids(i, j));
    const double e = pos.empty() ? 0.0 : med(pos).radius;
    ++out.mbar_evaluations;
    if (e > r_ml + eps) { --j; continue; }
    if (e >= r_ml - eps) {
      const CellEvaluation ev = evaluate_cell(c, i, j, cache);
      ++out.solves;
      if (ev.cost <= r_ml + eps) {
        out.matched = true;
        if (!out.solution || better_solution(ev.sol, *out.solution, eps)) out.solution = ev.sol;
      }
    }
    ++i;
  }
  return out;
}

struct NearbyStats {
  long anchors = 0;
  long lines = 0;
  long contexts = 0;  // distinct (p, q) orderings actually searched
  long evaluations = 0;
  long dm_evaluations = 0;
  long mbar_evaluations = 0;
  long mixed = 0;
  long fallbacks = 0;
  long nonvalid_not_med = 0;
  long doubly_marked = 0;
  long unmatched = 0;
  double max_budget_ratio = 0.0;  // evaluations / ((n'+n''+2)(1+ceil(log2(n'+2))))
};

struct NearbyResult {
  std::optional<PartitionSolution> solution;
  NearbyStats stats;
};

inline double budget_unit(int np, int nq) {
  return double(np + nq + 2) * (1.0 + std::ceil(std::log2(double(np + 2))));
}

// Works on the given coordinates; callers pass the scaled instance.
inline NearbyResult nearby_scaled(const std::vector<Point>& pts, double delta, const NearbyConfig& cfg,
                                  SplitCache& cache) {
  NearbyResult res;
  if (pts.size() < 2) return res;
  const double eps = cfg.tol.eps_eq;
  const auto anchors = build_m_set(convex_hull(pts), std::max(cfg.m_grid, 1), cfg.tol.eps_geom);
  res.stats.anchors = long(anchors.size());

  // One entry per distinct context. r starts at the cheapest cell the search
  // saw there; deposits from the opposite direction are merged after the pass.
  struct Entry { Point m; DirectedLine line; double r; double deposit; };
  std::vector<Entry> entries;
  std::map<std::vector<int>, int> seen;
  const int count = std::max(cfg.angle_count, 1);
  for (const Point& m : anchors) {
    std::vector<int> slot;
    for (const DirectedLine& l : build_direction_set(m, count)) {
      ++res.stats.lines;
      AnchorContext c = build_anchor_context(pts, m, l, delta, cfg.tol);
      std::vector<int> key = c.p_ids;
      key.push_back(-1);
      key.insert(key.end(), c.q_ids.begin(), c.q_ids.end());
      auto [it, fresh] = seen.emplace(std::move(key), int(entries.size()));
      slot.push_back(it->second);
      if (!fresh) continue;
      ++res.stats.contexts;
      MatrixContext mx(c, cache);
      mx.run();
      const MatrixStats& ms = mx.stats();
      res.stats.evaluations += ms.evaluations;
      res.stats.dm_evaluations += ms.dm_evaluations;
      res.stats.mixed += ms.mixed;
      res.stats.fallbacks += ms.fallback_evaluations;
      res.stats.nonvalid_not_med += ms.nonvalid_not_med;
      res.stats.doubly_marked += ms.doubly_marked;
      res.stats.max_budget_ratio =
          std::max(res.stats.max_budget_ratio, double(ms.evaluations) / budget_unit(c.np(), c.nq()));
      Entry e{m, l, kInf, kInf};
      for (double d : mx.outbox()) e.deposit = std::min(e.deposit, d);
      if (const CellEvaluation* b = mx.best()) {
        e.r = b->cost;
        if (!res.solution || better_solution(b->sol, *res.solution, eps)) res.solution = b->sol;
      }
      entries.push_back(e);
    }
    // Barrier: hand each direction's deposits to its opposite. With an odd
    // count there is no opposite and the deposits stay home.
    for (int k = 0; k < count; ++k) {
      const int o = count % 2 == 0 ? (k + count / 2) % count : k;
      Entry& e = entries[slot[k]];
      e.r = std::min(e.r, entries[slot[o]].deposit);
    }
  }
  double best_r = kInf;
  for (const Entry& e : entries) best_r = std::min(best_r, e.r);
  // Only contexts whose r_ml ties the best can improve the smaller radius.
  for (const Entry& e : entries) {
    if (!(e.r <= best_r + eps)) continue;
    AnchorContext c = build_anchor_context(pts, e.m, e.line, delta, cfg.tol);
    Reconstruction rc = reconstruct_bos(c, e.r, cache, res.solution);
    res.stats.mbar_evaluations += rc.mbar_evaluations;
    if (!rc.matched) ++res.stats.unmatched;
    if (rc.solution && better_solution(*rc.solution, *res.solution, eps)) res.solution = rc.solution;
  }
  return res;
}

inline NearbyResult solve_nearby(std::span<const Point> points, double delta, const NearbyConfig& cfg = {}) {
  auto [map, pts] = scale_to_unit_square(points);
  SplitCache cache;
  NearbyResult r = nearby_scaled(pts, delta * map.scale, cfg, cache);
  if (r.solution) {
    PartitionSolution& s = *r.solution;
    s.d1 = map.invert(s.d1);
    s.d2 = map.invert(s.d2);
    s.cost /= map.scale;
  }
  return r;
}

}  // namespace pctc
