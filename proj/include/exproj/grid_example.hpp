#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "exproj/rational.hpp"

namespace exproj {

// ⌊N^{p/q}⌋ exactly: the q-th root of N^p by binary search on big
// integers.  Every exponent in the grid construction is floored this way
// so that all counts are exact integers.
inline long long ipow_floor(long long N, const Rational& e) {
  if (N < 1) throw std::domain_error("ipow_floor: need N >= 1");
  if (e < 0) throw std::domain_error("ipow_floor: need exponent >= 0");
  const BigInt p = numerator(e);
  const BigInt q = denominator(e);
  const BigInt target = pow(BigInt(N), p.convert_to<unsigned>());
  BigInt lo = 0, hi = 1;
  const unsigned qi = q.convert_to<unsigned>();
  while (pow(hi, qi) <= target) hi <<= 1;
  while (lo + 1 < hi) {
    const BigInt mid = (lo + hi) / 2;
    if (pow(mid, qi) <= target)
      lo = mid;
    else
      hi = mid;
  }
  return lo.convert_to<long long>();
}

// The integer point/line incidence construction: points
// A = {(x,y) ∈ ℤ² : |x| ≤ ⌊N^{a−s}⌋, |y| ≤ ⌊N^s⌋}, slope set
// E = {k ∈ ℤ : |k| ≤ ⌊N^{2s−a}⌋}, and the covering line family
// y = kx + m with |m| ≤ ⌊10 N^s⌋.
struct GridExample {
  long long N = 0;
  Rational a;
  Rational s;
  long long half_width = 0;    // X = ⌊N^{a−s}⌋
  long long half_height = 0;   // Y = ⌊N^s⌋
  long long slope_bound = 0;   // ⌊N^{2s−a}⌋
  long long offset_bound = 0;  // ⌊10 N^s⌋

  long long point_count() const { return (2 * half_width + 1) * (2 * half_height + 1); }
  long long slope_count() const { return 2 * slope_bound + 1; }
  long long line_count() const { return slope_count() * (2 * offset_bound + 1); }
};

inline GridExample st_grid_example(long long N, const Rational& a, const Rational& s) {
  if (N < 4) throw std::domain_error("st_grid_example: need N >= 4");
  if (!(a > 0 && a <= 2)) throw std::domain_error("st_grid_example: need 0 < a <= 2");
  if (!(2 * s >= a)) throw std::domain_error("st_grid_example: need 2s >= a");
  if (!(s <= std::min(Rational(1), a))) throw std::domain_error("st_grid_example: need s <= min{1, a}");
  GridExample g;
  g.N = N;
  g.a = a;
  g.s = s;
  g.half_width = ipow_floor(N, a - s);
  g.half_height = ipow_floor(N, s);
  g.slope_bound = ipow_floor(N, 2 * s - a);
  g.offset_bound = 10 * g.half_height;
  return g;
}

// Number of distinct values of y − kx over A, by brute force.  A
// timestamped hit array over the value range keeps repeated sweeps
// allocation-free.
inline long long slope_projection_count(const GridExample& g, long long slope) {
  const long long X = g.half_width, Y = g.half_height;
  const long long absk = slope < 0 ? -slope : slope;
  const long long span = Y + absk * X;
  static thread_local std::vector<int64_t> stamp;
  static thread_local int64_t counter = 0;
  if (stamp.size() < static_cast<size_t>(2 * span + 1)) stamp.resize(2 * span + 1, -1);
  const int64_t tick = ++counter;
  long long distinct = 0;
  for (long long x = -X; x <= X; ++x) {
    const long long base = -slope * x + span;  // shift into [0, 2·span]
    for (long long y = -Y; y <= Y; ++y) {
      const long long idx = base + y;
      if (stamp[idx] != tick) {
        stamp[idx] = tick;
        ++distinct;
      }
    }
  }
  return distinct;
}

// Closed form for the same count: the x-slices of values are windows of
// length 2Y+1 stepping by |k|, so they tile an interval while
// |k| ≤ 2Y+1 and are pairwise disjoint beyond it.
inline long long slope_projection_count_closed_form(const GridExample& g, long long slope) {
  const long long X = g.half_width, Y = g.half_height;
  const long long absk = slope < 0 ? -slope : slope;
  if (absk <= 2 * Y + 1) return 2 * (Y + absk * X) + 1;
  return (2 * X + 1) * (2 * Y + 1);
}

struct ExceptionalScan {
  std::vector<long long> slopes;
  double threshold = 0.0;
};

// All integer slopes |k| ≤ N whose projection count stays below
// threshold_mult·N^s.  The slope set E of the construction shows up here
// once the multiplier reaches 5.
inline ExceptionalScan exceptional_scan(const GridExample& g, double threshold_mult) {
  if (threshold_mult < 1.0) throw std::domain_error("exceptional_scan: need threshold_mult >= 1");
  ExceptionalScan scan;
  scan.threshold = threshold_mult * std::pow(static_cast<double>(g.N), to_double(g.s));
  for (long long k = -g.N; k <= g.N; ++k) {
    if (static_cast<double>(slope_projection_count(g, k)) <= scan.threshold)
      scan.slopes.push_back(k);
  }
  return scan;
}

// Least-squares slope of log(count) against log(N).
inline double loglog_regression_slope(const std::vector<std::pair<long long, long long>>& data) {
  if (data.size() < 2) throw std::domain_error("loglog_regression_slope: need >= 2 samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [N, count] : data) {
    const double x = std::log(static_cast<double>(N));
    const double y = std::log(static_cast<double>(count));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(data.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace exproj
