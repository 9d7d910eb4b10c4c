#pragma once

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "exproj/point_set.hpp"

namespace exproj {

// Uniform δ-net of [0,1]; the canonical (δ,1)-set.
inline PointSet synthetic_net(double delta) {
  if (!(delta > 0 && delta < 1)) throw std::invalid_argument("synthetic_net: need 0 < delta < 1");
  PointSet p;
  p.dim = 1;
  p.delta = delta;
  const long long count = static_cast<long long>(std::floor(1.0 / delta));
  for (long long i = 0; i <= count; ++i) p.points.push_back({std::min(1.0, i * delta)});
  return p;
}

// Two uniform δ-nets over [0, 1/4) and [3/4, 1); mass splits across two
// well-separated cells.
inline PointSet synthetic_two_clusters(double delta) {
  if (!(delta > 0 && delta < 0.25))
    throw std::invalid_argument("synthetic_two_clusters: need 0 < delta < 1/4");
  PointSet p;
  p.dim = 1;
  p.delta = delta;
  const long long per = static_cast<long long>(std::floor(0.25 / delta));
  for (long long i = 0; i < per; ++i) p.points.push_back({i * delta});
  for (long long i = 0; i < per; ++i) p.points.push_back({0.75 + i * delta});
  return p;
}

// Self-similar base-b set: at each of the `levels` digit positions a
// random subset of `keep` digits survives, so the result is a
// (b^{-levels}, log keep / log b)-set of exactly keep^levels points.
inline PointSet synthetic_cantor(int base, int keep, int levels, unsigned long long seed) {
  if (base < 2 || keep < 1 || keep > base || levels < 1)
    throw std::invalid_argument("synthetic_cantor: need 2 <= base, 1 <= keep <= base, levels >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> digits(levels);
  for (int i = 0; i < levels; ++i) {
    std::vector<int> all(base);
    for (int d = 0; d < base; ++d) all[d] = d;
    std::shuffle(all.begin(), all.end(), rng);
    digits[i].assign(all.begin(), all.begin() + keep);
    std::sort(digits[i].begin(), digits[i].end());
  }
  PointSet p;
  p.dim = 1;
  p.delta = std::pow(static_cast<double>(base), -levels);
  std::vector<double> values = {0.0};
  double scale = 1.0;
  for (int i = 0; i < levels; ++i) {
    scale /= base;
    std::vector<double> next;
    next.reserve(values.size() * keep);
    for (double v : values)
      for (int d : digits[i]) next.push_back(v + d * scale);
    values = std::move(next);
  }
  for (double v : values) p.points.push_back({v});
  return p;
}

}  // namespace exproj
