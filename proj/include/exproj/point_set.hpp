#pragma once

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "exproj/metrics.hpp"
#include "exproj/subspace.hpp"

namespace exproj {

// A finite point cloud at separation scale delta.
struct PointSet {
  int dim = 0;
  std::vector<DVec> points;
  double delta = 0.0;

  size_t size() const { return points.size(); }
};

inline double point_dist(const DVec& a, const DVec& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

inline double diameter(const PointSet& p) {
  double best = 0.0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j) best = std::max(best, point_dist(p.points[i], p.points[j]));
  return best;
}

// Pairwise distances at least delta.
inline bool delta_separated(const PointSet& p) {
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j) {
      if (point_dist(p.points[i], p.points[j]) < p.delta) return false;
    }
  return true;
}

// File format: line 1 "dim count delta", then one point per row.
inline void write_point_set(std::ostream& os, const PointSet& p) {
  os << p.dim << ' ' << p.size() << ' ' << p.delta << '\n';
  os.precision(17);
  for (const DVec& x : p.points) {
    for (int c = 0; c < p.dim; ++c) os << (c ? " " : "") << x[c];
    os << '\n';
  }
}

inline PointSet read_point_set(std::istream& is) {
  PointSet p;
  size_t count = 0;
  if (!(is >> p.dim >> count >> p.delta)) throw std::invalid_argument("point set: bad header");
  if (p.dim <= 0 || p.delta <= 0) throw std::invalid_argument("point set: bad dim or delta");
  p.points.assign(count, DVec(p.dim));
  for (size_t i = 0; i < count; ++i)
    for (int c = 0; c < p.dim; ++c) {
      if (!(is >> p.points[i][c])) throw std::invalid_argument("point set: truncated rows");
    }
  return p;
}

// #(P ∩ B_r(x)) ≤ C (r/δ)^s, checked over all centers x ∈ P and dyadic
// radii r = 2^j·δ up to the diameter.  worst_ratio is the largest
// count / (C (r/δ)^s) encountered; pass means worst_ratio ≤ 1.
struct FrostmanReport {
  bool pass = true;
  double worst_ratio = 0.0;
  int worst_center = -1;
  double worst_radius = 0.0;
  long long worst_count = 0;
};

inline FrostmanReport check_frostman(const PointSet& p, const Rational& s, double C) {
  FrostmanReport report;
  if (p.points.empty()) return report;
  const double s_d = to_double(s);
  const double diam = diameter(p);
  for (size_t i = 0; i < p.size(); ++i) {
    for (double r = p.delta; ; r *= 2.0) {
      long long count = 0;
      for (const DVec& q : p.points)
        if (point_dist(p.points[i], q) <= r) ++count;
      const double cap = C * std::pow(r / p.delta, s_d);
      const double ratio = static_cast<double>(count) / cap;
      if (ratio > report.worst_ratio) {
        report.worst_ratio = ratio;
        report.worst_center = static_cast<int>(i);
        report.worst_radius = r;
        report.worst_count = count;
      }
      if (r > diam) break;
    }
  }
  report.pass = report.worst_ratio <= 1.0;
  return report;
}

// Greedy extraction of a (δ,s,C)-subset: scan in input order and keep a
// point iff the Frostman condition still holds at every dyadic radius
// afterwards.  Output re-passes check_frostman with the same (s, C) by
// construction.
inline PointSet extract_delta_s_set(const PointSet& p, const Rational& s, double C) {
  PointSet out;
  out.dim = p.dim;
  out.delta = p.delta;
  if (p.points.empty()) return out;
  const double s_d = to_double(s);
  const double diam = std::max(diameter(p), p.delta);
  std::vector<double> caps;  // per dyadic level j: C·2^{js}
  std::vector<double> radii;
  for (double r = p.delta; ; r *= 2.0) {
    radii.push_back(r);
    caps.push_back(C * std::pow(r / p.delta, s_d));
    if (r > diam) break;
  }
  for (const DVec& cand : p.points) {
    bool ok = true;
    for (size_t j = 0; j < radii.size() && ok; ++j) {
      const double r = radii[j];
      // Only balls containing the candidate gain a point.
      for (size_t i = 0; i <= out.points.size() && ok; ++i) {
        const DVec& center = (i == out.points.size()) ? cand : out.points[i];
        if (point_dist(center, cand) > r) continue;
        long long count = 1;  // the candidate itself
        for (const DVec& q : out.points)
          if (point_dist(center, q) <= r) ++count;
        if (static_cast<double>(count) > caps[j]) ok = false;
      }
    }
    if (ok) out.points.push_back(cand);
  }
  return out;
}

// Greedy δ-separation count of the projected cloud; within 3^k of the
// true covering number of π_V(P) at scale δ.
inline int projection_covering_number(const PointSet& p, const Subspace& v, double delta) {
  if (v.ambient() != p.dim) throw std::invalid_argument("projection_covering_number: dimension mismatch");
  const DMat proj = detail::to_double_matrix(projection_matrix(v));
  std::vector<DVec> kept;
  for (const DVec& x : p.points) {
    const DVec y = detail::dapply(proj, x);
    bool separated = true;
    for (const DVec& z : kept) {
      if (point_dist(y, z) < delta) {
        separated = false;
        break;
      }
    }
    if (separated) kept.push_back(y);
  }
  return static_cast<int>(kept.size());
}

// A dyadic cube of side 2^{-level} in [0,1]^m, identified by its integer
// corner coordinates.
struct DyadicCube {
  int level = 0;
  std::vector<long long> coords;
};

struct DyadicCoveringReport {
  bool coverage_ok = true;
  int first_uncovered = -1;
  bool sum_ok = true;
  double sum_value = 0.0;
  bool counting_ok = true;
  std::string counting_violation;
  bool pass() const { return coverage_ok && sum_ok && counting_ok; }
};

namespace detail {

inline bool cube_contains(const DyadicCube& cube, const DVec& x) {
  const double side = std::ldexp(1.0, -cube.level);
  for (size_t i = 0; i < x.size(); ++i) {
    const double lo = cube.coords[i] * side;
    if (!(x[i] >= lo && x[i] < lo + side)) {
      // Right-edge convention: 1.0 belongs to the last cube.
      if (!(x[i] == lo + side && lo + side == 1.0)) return false;
    }
  }
  return true;
}

}  // namespace detail

// Checks the three cover conditions: every target point covered, total
// r(D)^s mass at most eps, and per-ancestor counts at most 2^{(k-l)s}.
inline DyadicCoveringReport verify_dyadic_covering(const std::vector<DyadicCube>& cover,
                                                   const PointSet& target, const Rational& s,
                                                   const Rational& eps) {
  DyadicCoveringReport report;
  const double s_d = to_double(s);
  for (const DyadicCube& cube : cover) {
    if (cube.level < 0 || static_cast<int>(cube.coords.size()) != target.dim)
      throw std::invalid_argument("verify_dyadic_covering: malformed cube");
    for (long long c : cube.coords) {
      if (c < 0 || c >= (1LL << cube.level))
        throw std::invalid_argument("verify_dyadic_covering: cube outside [0,1]^m");
    }
  }

  for (size_t i = 0; i < target.size(); ++i) {
    bool covered = false;
    for (const DyadicCube& cube : cover) {
      if (detail::cube_contains(cube, target.points[i])) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      report.coverage_ok = false;
      report.first_uncovered = static_cast<int>(i);
      break;
    }
  }

  for (const DyadicCube& cube : cover) report.sum_value += std::pow(std::ldexp(1.0, -cube.level), s_d);
  report.sum_ok = report.sum_value <= to_double(eps);

  // s-dimensional condition: for each coarser level l and ancestor cube,
  // the number of level-k cover cubes below it is at most 2^{(k-l)s}.
  std::set<int> levels;
  for (const DyadicCube& cube : cover) levels.insert(cube.level);
  for (int k : levels) {
    for (int l = 0; l < k && report.counting_ok; ++l) {
      std::map<std::vector<long long>, long long> per_ancestor;
      for (const DyadicCube& cube : cover) {
        if (cube.level != k) continue;
        std::vector<long long> anc(cube.coords);
        for (auto& c : anc) c >>= (k - l);
        ++per_ancestor[anc];
      }
      const double cap = std::pow(2.0, (k - l) * s_d);
      for (const auto& [anc, count] : per_ancestor) {
        if (static_cast<double>(count) > cap) {
          report.counting_ok = false;
          report.counting_violation = "level " + std::to_string(k) + " under ancestor level " +
                                      std::to_string(l) + ": " + std::to_string(count) +
                                      " cubes > allowed " + std::to_string(cap);
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace exproj
