#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "exproj/point_set.hpp"
#include "exproj/rational.hpp"

namespace exproj {

// Nested K^{-r} lattice-cell partition of a point cloud in [0,1]^d,
// levels r = 0..M.  Cells are keyed by their integer coordinate vector;
// children of a cell at level r-1 are the K^d cells that refine it.
class CellTree {
 public:
  using Coords = std::vector<long long>;
  using Level = std::map<Coords, std::vector<int>>;

  CellTree(const PointSet& points, int K, int max_level)
      : dim_(points.dim), K_(K), max_level_(max_level) {
    if (K < 2) throw std::invalid_argument("CellTree: need K >= 2");
    if (max_level < 1) throw std::invalid_argument("CellTree: need at least one level");
    levels_.resize(max_level + 1);
    for (int r = 0; r <= max_level; ++r) {
      const double scale = std::pow(static_cast<double>(K), r);
      const long long cells_per_axis = static_cast<long long>(std::llround(scale));
      for (size_t i = 0; i < points.size(); ++i) {
        Coords c(dim_);
        for (int ax = 0; ax < dim_; ++ax) {
          long long idx = static_cast<long long>(std::floor(points.points[i][ax] * scale));
          idx = std::clamp(idx, 0LL, cells_per_axis - 1);
          c[ax] = idx;
        }
        levels_[r][c].push_back(static_cast<int>(i));
      }
    }
  }

  int dim() const { return dim_; }
  int branching() const { return K_; }
  int max_level() const { return max_level_; }
  const Level& level(int r) const { return levels_.at(r); }

  // Children of `parent` (a level r-1 cell) among the level-r cells.
  std::vector<std::pair<Coords, long long>> child_counts(int r, const Coords& parent) const {
    std::vector<std::pair<Coords, long long>> out;
    for (const auto& [coords, pts] : levels_.at(r)) {
      bool inside = true;
      for (int ax = 0; ax < dim_ && inside; ++ax) inside = (coords[ax] / K_ == parent[ax]);
      if (inside) out.emplace_back(coords, static_cast<long long>(pts.size()));
    }
    return out;
  }

 private:
  int dim_;
  int K_;
  int max_level_;
  std::vector<Level> levels_;
};

struct BroadNarrowOptions {
  int max_level = 0;             // 0: derive from delta as ~⌈log log 1/δ⌉
  double threshold_constant = 0; // 0: the printed K^{-d⁴} default
  Rational threshold_tau_override = Rational(-1);
};

struct BroadNarrowResult {
  bool success = false;
  bool input_mass_ok = true;
  int level = 0;                                  // r at which the split happened
  std::vector<long long> parent_cell;             // level r-1 coordinates
  std::vector<std::vector<long long>> cells;      // significant level-r cells
  std::vector<long long> cell_counts;
  double threshold = 0.0;                         // significance bound at that level
  long long required = 0;                         // d = ⌊K^{τ-ε}⌋
  std::vector<long long> level_max_counts;        // per visited level, for diagnostics
  std::vector<double> level_thresholds;
  std::string note;
};

// Multi-scale descent: at each level, children of the current cell that
// hold at least
//   c · |log δ|⁻³ · K^{ε(r-1)} · 2^{-(r-1)} · (K^{r-1} δ)^{-τ}
// points are significant.  If at least ⌊K^{τ-ε}⌋ children are
// significant the level is returned (each returned count re-checked
// against the bound); otherwise the descent follows the fullest child.
// The constant c defaults to K^{-d⁴}, which is meaningful only at small
// dimension, so callers may override it.
inline BroadNarrowResult broad_narrow(const PointSet& points, const Rational& tau,
                                      const Rational& eps, int K,
                                      const BroadNarrowOptions& options = {}) {
  BroadNarrowResult result;
  const double delta = points.delta;
  if (!(delta > 0 && delta < 1)) throw std::invalid_argument("broad_narrow: need 0 < delta < 1");
  const double log_inv_delta = std::log(1.0 / delta);
  const double tau_d = to_double(tau);
  const double eps_d = to_double(eps);

  const double required_mass = std::pow(log_inv_delta, -3.0) * std::pow(delta, -tau_d);
  if (static_cast<double>(points.size()) < required_mass) {
    result.input_mass_ok = false;
    result.note = "input below |log delta|^-3 delta^-tau mass";
    return result;
  }

  int max_level = options.max_level;
  if (max_level <= 0) {
    max_level = std::max(1, static_cast<int>(std::ceil(std::log(std::max(2.0, log_inv_delta)))));
    const int depth_cap = static_cast<int>(std::floor(std::log(1.0 / delta) / std::log(double(K))));
    max_level = std::clamp(max_level, 1, std::max(1, depth_cap));
  }
  double c = options.threshold_constant;
  if (c <= 0) c = std::pow(static_cast<double>(K), -std::pow(static_cast<double>(points.dim), 4.0));

  result.required = static_cast<long long>(std::floor(std::pow(static_cast<double>(K), tau_d - eps_d)));
  if (result.required < 1) result.required = 1;

  const CellTree tree(points, K, max_level);
  CellTree::Coords current(points.dim, 0);
  for (int r = 1; r <= max_level; ++r) {
    const double threshold = c * std::pow(log_inv_delta, -3.0) *
                             std::pow(static_cast<double>(K), eps_d * (r - 1)) *
                             std::pow(2.0, -(r - 1)) *
                             std::pow(std::pow(static_cast<double>(K), r - 1) * delta, -tau_d);
    auto children = tree.child_counts(r, current);
    std::sort(children.begin(), children.end());
    long long level_max = 0;
    CellTree::Coords best_child;
    std::vector<std::pair<CellTree::Coords, long long>> significant;
    for (const auto& [coords, count] : children) {
      if (count > level_max) {
        level_max = count;
        best_child = coords;
      }
      if (static_cast<double>(count) >= threshold) significant.emplace_back(coords, count);
    }
    result.level_max_counts.push_back(level_max);
    result.level_thresholds.push_back(threshold);
    if (static_cast<long long>(significant.size()) >= result.required) {
      result.success = true;
      result.level = r;
      result.parent_cell = current;
      result.threshold = threshold;
      for (const auto& [coords, count] : significant) {
        if (static_cast<double>(count) < threshold)
          throw std::logic_error("broad_narrow: returned cell below its own threshold");
        result.cells.push_back(coords);
        result.cell_counts.push_back(count);
      }
      return result;
    }
    if (level_max == 0) break;  // current cell ran empty; nothing to descend into
    current = best_child;
  }
  result.note = "descent exhausted all levels without a broad split";
  return result;
}

// Axis-aligned half-open box, the cell shape used by top_cells.
struct Box {
  DVec lo;
  DVec hi;
  bool contains(const DVec& x) const {
    for (size_t i = 0; i < lo.size(); ++i)
      if (!(x[i] >= lo[i] && x[i] < hi[i])) return false;
    return true;
  }
};

struct TopCellsResult {
  std::vector<int> cell_indices;      // J winning cells, by descending count
  std::vector<long long> counts;      // their counts
  Rational certificate;               // (Σ_{j>J} counts) / #cells
  bool certificate_ok = false;        // J-th count ≥ certificate
};

// The J fullest cells of a partition, ties by cell index, together with
// the averaging certificate for the J-th count: whatever mass the
// winners leave behind is spread over at most #cells cells, so the J-th
// largest count is at least the leftover average.
inline TopCellsResult top_cells(const PointSet& points, const std::vector<Box>& cells, int J) {
  if (J < 1 || J > static_cast<int>(cells.size()))
    throw std::invalid_argument("top_cells: need 1 <= J <= #cells");
  std::vector<long long> counts(cells.size(), 0);
  for (const DVec& x : points.points) {
    for (size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].contains(x)) {
        ++counts[c];
        break;  // partition: first containing cell owns the point
      }
    }
  }
  std::vector<int> order(cells.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return counts[a] > counts[b]; });

  TopCellsResult result;
  long long leftover = 0;
  for (size_t rank = 0; rank < order.size(); ++rank) {
    if (rank < static_cast<size_t>(J)) {
      result.cell_indices.push_back(order[rank]);
      result.counts.push_back(counts[order[rank]]);
    } else {
      leftover += counts[order[rank]];
    }
  }
  result.certificate = Rational(leftover, static_cast<long long>(cells.size()));
  result.certificate_ok = Rational(result.counts.back()) >= result.certificate;
  return result;
}

}  // namespace exproj
