#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "exproj/bounds.hpp"
#include "exproj/subspace.hpp"

namespace exproj {

// Inputs of the exponent computation: J subspaces of common dimension k
// in ℝⁿ and an exponent p ≥ 1.
struct BLConfig {
  int n = 0;
  std::vector<Subspace> subspaces;
  Rational p = Rational(1);

  void validate() const {
    if (subspaces.empty()) throw std::invalid_argument("BLConfig: need J >= 1 subspaces");
    if (p < 1) throw std::invalid_argument("BLConfig: need p >= 1");
    const int k = subspaces.front().dim();
    for (const Subspace& w : subspaces) {
      if (w.ambient() != n) throw std::invalid_argument("BLConfig: ambient dimension mismatch");
      if (w.dim() != k) throw std::invalid_argument("BLConfig: subspace dimensions differ");
    }
  }
};

// Finite search family for the sup over subspaces L.  Always contains
// {0} and ℝⁿ; deduplicated by canonical basis.
struct CandidateFamily {
  std::vector<Subspace> subspaces;
  bool truncated = false;
};

// Closure of seeds ∪ their orthocomplements ∪ all coordinate subspaces
// under pairwise sum and intersection, iterated to a fixpoint or until
// cap distinct subspaces have been collected.  Hitting the cap sets the
// truncation flag; it is not an error.
inline CandidateFamily lattice_closure(int n, const std::vector<Subspace>& seeds, int cap = 512) {
  CandidateFamily family;
  std::set<std::string> seen;
  const auto add = [&](const Subspace& s) {
    if (static_cast<int>(family.subspaces.size()) >= cap) {
      family.truncated = true;
      return false;
    }
    if (seen.insert(s.key()).second) family.subspaces.push_back(s);
    return true;
  };

  add(Subspace::zero(n));
  add(Subspace::full(n));
  // All coordinate subspaces, by axis subset.
  std::vector<int> axes;
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    axes.clear();
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) axes.push_back(i);
    if (!add(Subspace::coordinate(n, axes))) return family;
  }
  for (const Subspace& s : seeds) {
    if (s.ambient() != n) throw std::invalid_argument("lattice_closure: ambient mismatch");
    if (!add(s) || !add(orthocomplement(s))) return family;
  }

  // Fixpoint iteration over pairs, in insertion order for determinism.
  size_t frontier = 0;
  while (frontier < family.subspaces.size()) {
    const size_t end = family.subspaces.size();
    for (size_t i = frontier; i < end; ++i) {
      for (size_t j = 0; j < end; ++j) {
        const Subspace a = family.subspaces[i];
        const Subspace b = family.subspaces[j];
        if (!add(sum(a, b)) || !add(intersect(a, b))) return family;
      }
    }
    frontier = end;
  }
  return family;
}

struct BLResult {
  Rational value;
  Subspace critical;
  bool certified_lower_bound = true;  // the sup is searched over a finite family
  bool truncated = false;
};

namespace detail {

inline Rational bl_objective(const BLConfig& config, const Subspace& l) {
  Rational proj_sum(0);
  for (const Subspace& w : config.subspaces) proj_sum += proj_dim(w, l);
  return Rational(l.dim()) -
         config.p * proj_sum / static_cast<long long>(config.subspaces.size());
}

}  // namespace detail

// max over the candidate family of dim L − (p/J)·Σ_j dim π_{W_j}(L).
// Searching a finite family certifies a lower bound on the true sup;
// ties go to the smallest dim L, then to canonical basis order.
inline BLResult bl_constant(const BLConfig& config, const CandidateFamily& candidates) {
  config.validate();
  if (candidates.subspaces.empty()) throw std::invalid_argument("bl_constant: empty candidate family");
  const Subspace* best = nullptr;
  Rational best_value;
  for (const Subspace& l : candidates.subspaces) {
    if (l.ambient() != config.n) throw std::invalid_argument("bl_constant: candidate ambient mismatch");
    const Rational v = detail::bl_objective(config, l);
    if (best == nullptr || v > best_value ||
        (v == best_value && (l.dim() < best->dim() || (l.dim() == best->dim() && l < *best)))) {
      best = &l;
      best_value = v;
    }
  }
  return BLResult{best_value, *best, true, candidates.truncated};
}

inline std::pair<Subspace, Rational> critical_subspace(const BLConfig& config,
                                                       const CandidateFamily& candidates) {
  const BLResult r = bl_constant(config, candidates);
  return {r.critical, r.value};
}

// Number of patches whose projection to L has dimension at least the
// threshold, i.e. the patches outside the low-rank locus.
inline int transversal_count(const std::vector<Subspace>& patches, const Subspace& l,
                             int threshold) {
  int count = 0;
  for (const Subspace& v : patches) {
    if (proj_dim(l, v) >= threshold) ++count;
  }
  return count;
}

// Random sanity check of the λ_p reduction: whenever every sampled patch
// projects to L with dimension ≥ m(t,l), the BL objective of that
// configuration cannot exceed λ_p.  Violations are reported, never thrown.
struct CrosscheckReport {
  int trials = 0;
  int configurations_checked = 0;
  int violations = 0;
};

inline CrosscheckReport lambda_p_crosscheck(const Problem& prob, int t_floor, const Rational& p,
                                            int trials, unsigned long long seed) {
  CrosscheckReport report;
  if (trials <= 0) return report;
  report.trials = trials;
  const Rational lambda = lambda_p(prob, t_floor, p);
  const std::vector<int> m = m_profile(prob, t_floor);
  std::mt19937_64 rng(seed);
  const int patches_per_trial = prob.k + 2;

  // Coordinate representatives of every dimension l.
  std::vector<Subspace> coords;
  for (int l = 0; l <= prob.n; ++l) {
    std::vector<int> axes(l);
    for (int i = 0; i < l; ++i) axes[i] = i;
    coords.push_back(Subspace::coordinate(prob.n, axes));
  }

  for (int trial = 0; trial < trials; ++trial) {
    std::vector<Subspace> patches;
    for (int j = 0; j < patches_per_trial; ++j)
      patches.push_back(random_subspace(rng, prob.n, prob.k));
    for (int l = 0; l <= prob.n; ++l) {
      int min_proj = prob.k;
      for (const Subspace& v : patches) min_proj = std::min(min_proj, proj_dim(coords[l], v));
      if (min_proj < m[l]) continue;
      ++report.configurations_checked;
      if (Rational(l) - p * min_proj > lambda) ++report.violations;
    }
  }
  return report;
}

// Config file: line 1 "n J p", then J subspace blocks in the subspace
// file format.
inline BLConfig read_bl_config(std::istream& is) {
  BLConfig config;
  int j_count = 0;
  std::string p_text;
  if (!(is >> config.n >> j_count >> p_text))
    throw std::invalid_argument("bl config: missing 'n J p' header");
  if (config.n <= 0 || j_count <= 0) throw std::invalid_argument("bl config: bad n or J");
  config.p = parse_rational(p_text);
  for (int j = 0; j < j_count; ++j) {
    Subspace s = read_subspace(is);
    if (s.ambient() != config.n) throw std::invalid_argument("bl config: subspace ambient mismatch");
    config.subspaces.push_back(std::move(s));
  }
  config.validate();
  return config;
}

inline void write_bl_config(std::ostream& os, const BLConfig& config) {
  os << config.n << ' ' << config.subspaces.size() << ' ' << format_rational(config.p) << '\n';
  for (const Subspace& s : config.subspaces) write_subspace(os, s);
}

}  // namespace exproj
