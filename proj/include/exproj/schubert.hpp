#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>

#include "exproj/rational.hpp"

namespace exproj {

// dim G(m,n) = m(n−m).
inline long long grassmann_dim(int m, int n) {
  if (m < 0 || n < 0 || m > n) throw std::domain_error("grassmann_dim: need 0 <= m <= n");
  return static_cast<long long>(m) * (n - m);
}

// Dimension of the cycle {V ∈ G(k,n) : dim π_V(W) ≤ l} for a fixed
// W ∈ G(m,n): d(k−l, n−m) + d(l, n−(k−l)).  Preconditions are reported
// by name so callers can see which inequality failed.
inline long long schubert_dim(int n, int k, int m, int l) {
  const auto in_range = [n](int x) { return x >= 0 && x <= n; };
  if (!in_range(k) || !in_range(m) || !in_range(l))
    throw std::domain_error("schubert_dim: arguments must lie in [0, n]");
  if (n - k < m - l) throw std::domain_error("schubert_dim: condition n-k >= m-l violated");
  if (l > k) throw std::domain_error("schubert_dim: condition l <= k violated");
  if (l > m) throw std::domain_error("schubert_dim: condition l <= m violated");
  return grassmann_dim(k - l, n - m) + grassmann_dim(l, n - (k - l));
}

// E(m,l): dimension of {V ∈ G(k,n) : dim π_L(V) ≤ m} for a fixed l-plane L.
// Three regimes: impossible constraint (0), proper cycle, vacuous
// constraint (full Grassmannian).
inline long long exceptional_locus_dim(int n, int k, int m, int l) {
  if (k < 1 || k > n - 1) throw std::domain_error("exceptional_locus_dim: need 1 <= k <= n-1");
  if (l < 0 || l > n) throw std::domain_error("exceptional_locus_dim: need 0 <= l <= n");
  if (m < -1 || m > n) throw std::domain_error("exceptional_locus_dim: need -1 <= m <= n");
  const long long total = grassmann_dim(k, n);
  const int lo = std::max(0, l + k - n);
  const int hi = std::min(l, k);
  if (m < lo) return 0;
  if (m > hi) return total;
  return total - static_cast<long long>(k - m) * (l - m);
}

}  // namespace exproj
