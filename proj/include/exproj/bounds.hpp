#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "exproj/rational.hpp"
#include "exproj/schubert.hpp"

namespace exproj {

// The fixed pair of integers the whole bound engine is parameterized by.
struct Problem {
  int n;
  int k;
  Problem(int n_, int k_) : n(n_), k(k_) {
    if (k < 1 || k >= n) throw std::domain_error("Problem: need 1 <= k < n");
  }
  long long grass_dim() const { return grassmann_dim(k, n); }
};

enum class BoundSource {
  trivial,
  kaufman_mattila,
  falconer,
  he,
  theorem1,
  mainthm,
  type1,
  type2,
  type3,
  type4,
  plateau,
  r3_table,
  ren_wang,
};

// A bound value together with the result that produced it.  mainthm
// carries the certified dimension t, plateau carries its (w,l) witness,
// the construction types carry their (m,l) decomposition.
struct BoundValue {
  Rational value;
  BoundSource source = BoundSource::trivial;
  int p1 = -1;
  int p2 = -1;

  std::string source_label() const {
    switch (source) {
      case BoundSource::trivial: return "trivial";
      case BoundSource::kaufman_mattila: return "kaufman_mattila";
      case BoundSource::falconer: return "falconer";
      case BoundSource::he: return "he";
      case BoundSource::theorem1: return "theorem1";
      case BoundSource::mainthm: return "mainthm(t=" + std::to_string(p1) + ")";
      case BoundSource::type1: return "type1";
      case BoundSource::type2: return "type2";
      case BoundSource::type3: return "type3";
      case BoundSource::type4: return "type4";
      case BoundSource::plateau:
        return "plateau(w=" + std::to_string(p1) + ",l=" + std::to_string(p2) + ")";
      case BoundSource::r3_table: return "r3_table";
      case BoundSource::ren_wang: return "ren_wang";
    }
    return "?";
  }
};

inline void require_ab_range(const Problem& prob, const Rational& a) {
  if (!(a > 0 && a < prob.n)) throw std::domain_error("need 0 < a < n");
}

inline void require_s_range(const Problem& prob, const Rational& a, const Rational& s) {
  const Rational cap = std::min(Rational(prob.k), a);
  if (!(s > 0 && s < cap)) throw std::domain_error("need 0 < s < min{k, a}");
}

// Smallest m ≥ 0 with E(m,l) > t; always ≤ min{l,k}+1 because the locus
// becomes the whole Grassmannian once the constraint is vacuous.
inline int m_of(const Problem& prob, int t_floor, int l) {
  if (t_floor < 0 || t_floor >= prob.grass_dim())
    throw std::domain_error("m_of: need 0 <= t < k(n-k)");
  if (l < 0 || l > prob.n) throw std::domain_error("m_of: need 0 <= l <= n");
  for (int m = 0;; ++m) {
    if (exceptional_locus_dim(prob.n, prob.k, m, l) > t_floor) return m;
  }
}

inline std::vector<int> m_profile(const Problem& prob, int t_floor) {
  std::vector<int> profile(prob.n + 1);
  for (int l = 0; l <= prob.n; ++l) profile[l] = m_of(prob, t_floor, l);
  return profile;
}

// Fractional t changes nothing: the locus dimensions are integers, so m
// depends on t only through its floor.
inline int m_of(const Problem& prob, const Rational& t, int l) {
  return m_of(prob, floor_rat(t).convert_to<int>(), l);
}

// Closed form for m at t = k(n−k) − u: the quadratic condition
// m² − (k+l)m + kl − u < 0 admits the integers above its smaller root,
// which the floored-surd evaluation extracts exactly.  The result is
// additionally clamped below by l+k−n, where the locus dimension leaves
// its quadratic regime; the clamp is inactive for u ≤ min{k, n−k}.
inline int m_closed_form(const Problem& prob, int u, int l) {
  if (u < 1 || u > prob.grass_dim()) throw std::domain_error("m_closed_form: need 1 <= u <= k(n-k)");
  if (l < 0 || l > prob.n) throw std::domain_error("m_closed_form: need 0 <= l <= n");
  const BigInt d = BigInt(prob.k - l) * (prob.k - l) + 4 * BigInt(u);
  BigInt m = floor_half_diff(BigInt(prob.k + l), d) + 1;
  if (m < l + prob.k - prob.n) m = l + prob.k - prob.n;
  if (m < 0) m = 0;
  return m.convert_to<int>();
}

// λ_p = max over l ∈ {0..n} of l − p·m(t,l), exact.
inline Rational lambda_p(const Problem& prob, int t_floor, const Rational& p) {
  if (p < 1) throw std::domain_error("lambda_p: need p >= 1");
  const std::vector<int> m = m_profile(prob, t_floor);
  Rational best = Rational(0) - p * m[0];
  for (int l = 0; l <= prob.n; ++l) best = std::max(best, Rational(Rational(l) - p * m[l]));
  return best;
}

inline Rational lambda_p(const Problem& prob, const Rational& t, const Rational& p) {
  return lambda_p(prob, floor_rat(t).convert_to<int>(), p);
}

namespace detail {

// Candidate q values where the lower envelope of the lines
// q ↦ (a−l)q + m_l can peak: the endpoints of [0,1] and every pairwise
// intersection, clipped to the interval.
inline std::vector<Rational> envelope_breakpoints(const std::vector<int>& m) {
  std::vector<Rational> qs = {Rational(0), Rational(1)};
  const int n = static_cast<int>(m.size()) - 1;
  for (int l1 = 0; l1 <= n; ++l1)
    for (int l2 = l1 + 1; l2 <= n; ++l2) {
      const Rational q(m[l2] - m[l1], l2 - l1);
      if (q > 0 && q < 1) qs.push_back(q);
    }
  return qs;
}

inline Rational envelope_value(const std::vector<int>& m, const Rational& a, const Rational& q) {
  const int n = static_cast<int>(m.size()) - 1;
  Rational best = (a - 0) * q + m[0];
  for (int l = 1; l <= n; ++l) best = std::min(best, Rational((a - l) * q + m[l]));
  return best;
}

}  // namespace detail

// s★(a,t) = sup over q ∈ [0,1] of min over l of (a−l)q + m(t,l), with
// q = 1/p and q = 0 standing for p = ∞.  The objective is a concave
// piecewise-linear function of q, so the sup is attained at an endpoint
// or a pairwise crossing; all candidates are evaluated exactly.
inline Rational s_star(const Problem& prob, const Rational& a, int t_floor) {
  require_ab_range(prob, a);
  const std::vector<int> m = m_profile(prob, t_floor);
  Rational best;
  bool first = true;
  for (const Rational& q : detail::envelope_breakpoints(m)) {
    const Rational v = detail::envelope_value(m, a, q);
    if (first || v > best) {
      best = v;
      first = false;
    }
  }
  return best;
}

inline Rational s_star(const Problem& prob, const Rational& a, const Rational& t) {
  return s_star(prob, a, floor_rat(t).convert_to<int>());
}

// Same sup computed through λ: for q > 0, min_l((a−l)q + m_l) equals
// (a − λ_{1/q})·q.  Used as an algebraic cross-check of s_star.
inline Rational s_star_dual(const Problem& prob, const Rational& a, int t_floor) {
  require_ab_range(prob, a);
  const std::vector<int> m = m_profile(prob, t_floor);
  Rational best = Rational(*std::min_element(m.begin(), m.end()));  // q = 0
  for (const Rational& q : detail::envelope_breakpoints(m)) {
    if (q == 0) continue;
    const Rational v = (a - lambda_p(prob, t_floor, Rational(1) / q)) * q;
    best = std::max(best, v);
  }
  return best;
}

// Smallest t certified by the s★ machinery: dim E_s ≤ t holds for every
// s ≤ s★(a,t) because threshold sets nest, so scan t upward.
inline BoundValue upper_bound_mainthm(const Problem& prob, const Rational& a, const Rational& s) {
  require_ab_range(prob, a);
  require_s_range(prob, a, s);
  for (int t = 0; t < prob.grass_dim(); ++t) {
    if (s_star(prob, a, t) >= s) return BoundValue{Rational(t), BoundSource::mainthm, t};
  }
  return BoundValue{Rational(prob.grass_dim()), BoundSource::trivial};
}

// The classical bounds that apply at (a,s).  The projection-theorem
// bounds at s = ka/n extend to all s ≤ ka/n since E_s shrinks with s.
inline std::vector<BoundValue> upper_bound_classical(const Problem& prob, const Rational& a,
                                                     const Rational& s) {
  require_ab_range(prob, a);
  require_s_range(prob, a, s);
  const long long total = prob.grass_dim();
  std::vector<BoundValue> out;
  const Rational kaufman = Rational(total) + s - prob.k;
  out.push_back({kaufman, BoundSource::kaufman_mattila});
  const Rational falconer = Rational(total) + s - a;
  out.push_back({std::max(falconer, Rational(0)), BoundSource::falconer});
  const Rational ka_over_n = Rational(prob.k) * a / prob.n;
  if (s <= ka_over_n) {
    out.push_back({Rational(total - 1), BoundSource::he});
    out.push_back({Rational(total - std::min(prob.k, prob.n - prob.k)), BoundSource::theorem1});
  }
  if (prob.n == 2 && prob.k == 1)
    out.push_back({std::max(Rational(0), Rational(2 * s - a)), BoundSource::ren_wang});
  return out;
}

inline BoundValue best_upper(const Problem& prob, const Rational& a, const Rational& s) {
  BoundValue best = upper_bound_mainthm(prob, a, s);
  for (const BoundValue& b : upper_bound_classical(prob, a, s)) {
    if (b.value < best.value) best = b;  // ties keep the mainthm tag
  }
  return best;
}

// Exhaustive integer verification that the s★ machinery at
// t = k(n−k) − min{k,n−k} certifies s = ka/n, one row per l.  Each row
// records the proof's case split and the integer α it bounds.
struct Theorem1Report {
  struct Row {
    int l;
    int mu;
    int case_id;  // 1: l <= k, 2: l >= k
    long long alpha;
    Rational lhs;       // lk/n
    long long rhs;      // k - alpha
    bool pass;
  };
  int n = 0;
  int k = 0;
  int u = 0;
  std::vector<Row> rows;
  bool all_pass = true;
};

inline Theorem1Report verify_theorem1(const Problem& prob) {
  Theorem1Report report;
  report.n = prob.n;
  report.k = prob.k;
  report.u = std::min(prob.k, prob.n - prob.k);
  const int u = report.u;
  for (int l = 0; l <= prob.n; ++l) {
    Theorem1Report::Row row;
    row.l = l;
    row.case_id = (l <= prob.k) ? 1 : 2;
    row.mu = (l <= prob.k) ? prob.k - l : l - prob.k;
    const BigInt disc = BigInt(row.mu) * row.mu + 4 * BigInt(u);
    const BigInt half = (row.case_id == 1) ? floor_half_diff(BigInt(-row.mu), disc)
                                           : floor_half_diff(BigInt(row.mu), disc);
    row.alpha = static_cast<long long>(BigInt(-half - 1));
    row.rhs = prob.k - row.alpha;
    row.lhs = Rational(static_cast<long long>(l) * prob.k, prob.n);
    row.pass = row.lhs <= Rational(row.rhs);
    report.all_pass = report.all_pass && row.pass;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace exproj
