#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "exproj/bounds.hpp"

namespace exproj {

// a = m + beta with m ∈ ℕ and beta ∈ (0,1], so integers decompose with
// beta = 1.
struct Decomposition {
  int whole;
  Rational frac;
};

inline Decomposition decompose(const Rational& a) {
  if (a <= 0) throw std::domain_error("decompose: need a > 0");
  const BigInt m = ceil_rat(a) - 1;
  return Decomposition{m.convert_to<int>(), a - Rational(m)};
}

// One construction family evaluated at a decomposition of (a,s).  The
// value is meaningful only when conditions_met; otherwise
// failed_condition names the first violated requirement.
struct TypeBound {
  int type_id;  // 1..4, 0 for the plateau family
  int m = 0;    // plateau stores w here
  int l = 0;
  bool conditions_met = false;
  std::string failed_condition;
  Rational value = Rational(0);
};

inline void require_lower_range(const Problem& prob, const Rational& a, const Rational& s) {
  if (!(a > 0 && a < prob.n)) throw std::domain_error("need 0 < a < n");
  const Rational cap = std::min(Rational(prob.k), a);
  if (!(s > 0 && s <= cap)) throw std::domain_error("need 0 < s <= min{k, a}");
}

// The four product-set constructions, each with its printed conditions.
inline std::vector<TypeBound> type_bounds(const Problem& prob, const Rational& a,
                                          const Rational& s) {
  require_lower_range(prob, a, s);
  const auto [m, beta] = decompose(a);
  const auto [l, gamma] = decompose(s);
  const long long total = prob.grass_dim();
  const int n = prob.n, k = prob.k;
  std::vector<TypeBound> out;

  {
    TypeBound t{1, m, l};
    if (m < 1)
      t.failed_condition = "m >= 1";
    else if (m > n + l - k)
      t.failed_condition = "m <= n+l-k";
    else if (!(gamma > (beta + 1) / 2))
      t.failed_condition = "gamma > (beta+1)/2";
    else {
      t.conditions_met = true;
      t.value = Rational(total - static_cast<long long>(m - l) * (k - l)) + 2 * gamma - (beta + 1);
    }
    out.push_back(std::move(t));
  }
  {
    TypeBound t{2, m, l};
    if (m > n + l - k)
      t.failed_condition = "m <= n+l-k";
    else if (!(gamma > beta))
      t.failed_condition = "gamma > beta";
    else {
      t.conditions_met = true;
      t.value = Rational(total - static_cast<long long>(m - l) * (k - l));
    }
    out.push_back(std::move(t));
  }
  {
    TypeBound t{3, m, l};
    if (m > n + l - k - 1)
      t.failed_condition = "m <= n+l-k-1";
    else if (!(gamma > beta / 2))
      t.failed_condition = "gamma > beta/2";
    else {
      t.conditions_met = true;
      t.value = Rational(total - static_cast<long long>(m + 1 - l) * (k - l)) + 2 * gamma - beta;
    }
    out.push_back(std::move(t));
  }
  {
    TypeBound t{4, m, l};
    if (l < 1)
      t.failed_condition = "l >= 1";
    else if (m > n + l - k - 1)
      t.failed_condition = "m <= n+l-k-1";
    else {
      t.conditions_met = true;
      t.value = Rational(total - static_cast<long long>(m - l + 1) * (k - l + 1));
    }
    out.push_back(std::move(t));
  }
  return out;
}

// Constant lower bounds from sets inside a w-plane: if the projection of
// the w-plane to V has dimension ≤ l, then V is exceptional as long as
// l + max{0, a−w} < s.  The best locus dimension over admissible (w,l)
// wins; (w,l) = (m,l) reproduces the Type 2 value.
inline TypeBound plateau_bound(const Problem& prob, const Rational& a, const Rational& s) {
  require_lower_range(prob, a, s);
  TypeBound best{0, 0, 0};
  best.failed_condition = "no (w,l) with l + max{0, a-w} < s";
  for (int w = 0; w <= prob.n; ++w) {
    for (int l = 0; l <= std::min(prob.k, w); ++l) {
      const Rational tail = std::max(Rational(0), Rational(a - w));
      if (!(Rational(l) + tail < s)) continue;
      const Rational value(exceptional_locus_dim(prob.n, prob.k, l, w));
      if (!best.conditions_met || value > best.value) {
        best.conditions_met = true;
        best.failed_condition.clear();
        best.m = w;
        best.l = l;
        best.value = value;
      }
    }
  }
  return best;
}

// Piecewise table for projections to lines in ℝ³, boundaries exactly as
// printed.
inline Rational r3_line_table(const Rational& a, const Rational& s) {
  if (!(a > 0 && a < 3)) throw std::domain_error("r3_line_table: need 0 < a < 3");
  if (!(s > 0 && s < std::min(Rational(1), a)))
    throw std::domain_error("r3_line_table: need 0 < s < min{1, a}");
  if (a <= 1) return Rational(1);
  if (a <= 2) {
    if (s <= (a - 1) / 2) return Rational(0);
    if (s <= a - 1) return 1 + 2 * s - a;
    return Rational(1);
  }
  if (s <= (a - 1) / 2) return Rational(0);
  return 1 + 2 * s - a;
}

// Piecewise table for projections to planes in ℝ³.
inline Rational r3_plane_table(const Rational& a, const Rational& s) {
  if (!(a > 0 && a < 3)) throw std::domain_error("r3_plane_table: need 0 < a < 3");
  if (!(s > 0 && s < std::min(Rational(2), a)))
    throw std::domain_error("r3_plane_table: need 0 < s < min{2, a}");
  if (a <= 1) return std::max(Rational(0), Rational(2 * s - a));
  if (a <= 2) {
    if (s <= a / 2) return Rational(0);
    if (s <= 1) return 2 * s - a;
    if (s <= (a + 1) / 2) return Rational(1);
    return 2 * s - a;
  }
  if (s <= a - 1) return Rational(0);
  if (s <= (a + 1) / 2) return Rational(1);
  return 2 * s - a;
}

// Maximum over every applicable construction; the tag records which one
// attains it (constructions are consulted in type order, then plateau,
// then the printed tables, then the sharp planar value).
inline BoundValue best_lower(const Problem& prob, const Rational& a, const Rational& s) {
  require_lower_range(prob, a, s);
  BoundValue best{Rational(0), BoundSource::trivial};
  const auto consider = [&best](const Rational& v, BoundSource src, int p1 = -1, int p2 = -1) {
    if (v > best.value) best = BoundValue{v, src, p1, p2};
  };
  for (const TypeBound& t : type_bounds(prob, a, s)) {
    if (!t.conditions_met) continue;
    const BoundSource src = t.type_id == 1   ? BoundSource::type1
                            : t.type_id == 2 ? BoundSource::type2
                            : t.type_id == 3 ? BoundSource::type3
                                             : BoundSource::type4;
    consider(t.value, src, t.m, t.l);
  }
  const TypeBound p = plateau_bound(prob, a, s);
  if (p.conditions_met) consider(p.value, BoundSource::plateau, p.m, p.l);
  if (prob.n == 3 && s < std::min(Rational(prob.k), a)) {
    if (prob.k == 1) consider(r3_line_table(a, s), BoundSource::r3_table);
    if (prob.k == 2) consider(r3_plane_table(a, s), BoundSource::r3_table);
  }
  if (prob.n == 2 && prob.k == 1)
    consider(std::max(Rational(0), Rational(2 * s - a)), BoundSource::ren_wang);
  return best;
}

struct ExactRegionPoint {
  Rational a;
  Rational s;
  Rational value;
};

// Grid points where the best upper and lower bounds coincide.
inline std::vector<ExactRegionPoint> exact_regions(const Problem& prob,
                                                   const std::vector<Rational>& a_grid,
                                                   const std::vector<Rational>& s_grid) {
  std::vector<ExactRegionPoint> out;
  for (const Rational& a : a_grid) {
    if (!(a > 0 && a < prob.n)) continue;
    for (const Rational& s : s_grid) {
      if (!(s > 0 && s < std::min(Rational(prob.k), a))) continue;
      const BoundValue up = best_upper(prob, a, s);
      const BoundValue lo = best_lower(prob, a, s);
      if (up.value == lo.value) out.push_back({a, s, up.value});
    }
  }
  return out;
}

}  // namespace exproj
