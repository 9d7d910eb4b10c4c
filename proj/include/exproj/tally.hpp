#pragma once

#include <cmath>
#include <vector>

#include "exproj/metrics.hpp"
#include "exproj/point_set.hpp"

namespace exproj {

// Riemann sum of (Σ_slabs 1_slab)^p over the δ-balls of W, sampled at
// the ball centers (slab indicators are locally constant at scale δ):
//   δ^n · Σ_{x ∈ W} (#{slabs containing x})^p.
inline double multilinear_tally(const PointSet& w, const std::vector<std::vector<Slab>>& slab_families,
                                const Rational& p) {
  const double p_d = to_double(p);
  const double cell = std::pow(w.delta, static_cast<double>(w.dim));
  double total = 0.0;
  for (const DVec& x : w.points) {
    long long hits = 0;
    for (const auto& family : slab_families)
      for (const Slab& slab : family) {
        if (slab.plane().ambient() != w.dim)
          throw std::invalid_argument("multilinear_tally: slab ambient mismatch");
        if (slab_membership(slab, x)) ++hits;
      }
    if (hits > 0) total += std::pow(static_cast<double>(hits), p_d);
  }
  return cell * total;
}

}  // namespace exproj
