#pragma once

// Exhaustive matrix of one anchor context, every cell solved from scratch
// without prefix diagrams or a shared cache.

#include <vector>

#include "nearby.hpp"
#include "oracle.hpp"

namespace pctc::oracle {

struct MatrixOracle {
  int rows = 0, cols = 0;
  std::vector<CellEvaluation> cells;
  double min_cost = kInf;   // smallest cell cost
  double min_valid = kInf;  // smallest valid value

  const CellEvaluation& cell(int i, int j) const { return cells[std::size_t(i) * cols + j]; }
};

inline MatrixOracle oracle_matrix(const AnchorContext& c, int limit = 4000) {
  if (long(c.np()) * long(c.nq()) > limit) throw SizeLimit("oracle_matrix beyond the cell limit");
  MatrixOracle o;
  o.rows = c.rows();
  o.cols = c.cols();
  o.cells.reserve(std::size_t(o.rows) * o.cols);
  for (int i = 0; i < o.rows; ++i)
    for (int j = 0; j < o.cols; ++j) {
      const auto neg = c.negative_ids(i, j), pos = c.positive_ids(i, j);
      const auto pn = c.gather(neg), pp = c.gather(pos);
      SplitRecord rec;
      rec.sol = solve_restricted(pn, pp, c.delta, c.tol);
      for (int k : rec.sol.dominating1) rec.dom1.push_back(neg[k]);
      for (int k : rec.sol.dominating2) rec.dom2.push_back(pos[k]);
      rec.med1 = pn.empty() ? 0.0 : med(pn).radius;
      rec.med2 = pp.empty() ? 0.0 : med(pp).radius;
      o.cells.push_back(classify_record(c, i, j, rec));
      const CellEvaluation& ev = o.cells.back();
      o.min_cost = std::min(o.min_cost, ev.cost);
      if (ev.valid) o.min_valid = std::min(o.min_valid, ev.value);
    }
  return o;
}

}  // namespace pctc::oracle
