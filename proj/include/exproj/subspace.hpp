#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include "exproj/rational.hpp"

namespace exproj {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

namespace linalg {

// Reduced row echelon form in place, exact.  Pivots are chosen
// left-to-right, first nonzero row wins; leading coefficients are
// normalized to 1 and cleared above and below.  Returns the rank.
inline int rref(RatMat& m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    const Rational lead = m[rank][col];
    for (int c = col; c < cols; ++c) m[rank][c] /= lead;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (int c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  m.resize(rank, RatVec(cols, Rational(0)));
  return rank;
}

// Basis of {x : A·x = 0}, one row per free column of the RREF of A.
inline RatMat nullspace(RatMat a, int cols) {
  const int rank = rref(a);
  std::vector<int> pivot_col(rank, -1);
  std::vector<bool> is_pivot(cols, false);
  for (int r = 0; r < rank; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (a[r][c] != 0) {
        pivot_col[r] = c;
        is_pivot[c] = true;
        break;
      }
    }
  }
  RatMat basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols, Rational(0));
    v[free] = 1;
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

inline RatMat transpose(const RatMat& m) {
  if (m.empty()) return {};
  RatMat t(m[0].size(), RatVec(m.size(), Rational(0)));
  for (size_t r = 0; r < m.size(); ++r)
    for (size_t c = 0; c < m[0].size(); ++c) t[c][r] = m[r][c];
  return t;
}

inline RatMat multiply(const RatMat& a, const RatMat& b) {
  if (a.empty() || b.empty()) return {};
  RatMat out(a.size(), RatVec(b[0].size(), Rational(0)));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

inline RatMat identity(int n) {
  RatMat m(n, RatVec(n, Rational(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Exact inverse via Gauss-Jordan; input must be square and nonsingular.
inline RatMat invert(RatMat m) {
  const int n = static_cast<int>(m.size());
  for (int r = 0; r < n; ++r) {
    const RatVec id = identity(n)[r];
    m[r].insert(m[r].end(), id.begin(), id.end());
  }
  if (rref(m) != n) throw std::domain_error("invert: singular matrix");
  RatMat inv(n, RatVec(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv[r][c] = m[r][n + c];
  return inv;
}

inline Rational dot(const RatVec& a, const RatVec& b) {
  Rational s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace linalg

// A linear subspace of ℝⁿ with an exact rational basis.  The stored basis
// is the reduced row echelon form of any spanning set, so two subspaces
// are equal iff their stored bases are identical.
class Subspace {
 public:
  Subspace(int ambient_dim, RatMat spanning_rows) : n_(ambient_dim) {
    if (ambient_dim <= 0) throw std::invalid_argument("Subspace: ambient_dim must be positive");
    for (const auto& row : spanning_rows) {
      if (static_cast<int>(row.size()) != ambient_dim)
        throw std::invalid_argument("Subspace: row length does not match ambient_dim");
    }
    rows_ = std::move(spanning_rows);
    linalg::rref(rows_);
  }

  static Subspace zero(int n) { return Subspace(n, RatMat{}); }
  static Subspace full(int n) { return Subspace(n, linalg::identity(n)); }
  static Subspace line(RatVec v) {
    const int n = static_cast<int>(v.size());
    return Subspace(n, RatMat{std::move(v)});
  }
  // Span of the listed coordinate axes (0-based).
  static Subspace coordinate(int n, const std::vector<int>& axes) {
    RatMat rows;
    for (int a : axes) {
      if (a < 0 || a >= n) throw std::invalid_argument("coordinate: axis out of range");
      RatVec v(n, Rational(0));
      v[a] = 1;
      rows.push_back(std::move(v));
    }
    return Subspace(n, std::move(rows));
  }

  int ambient() const { return n_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const RatMat& basis() const { return rows_; }

  bool contains(const RatVec& v) const {
    if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("contains: dimension mismatch");
    RatMat m = rows_;
    m.push_back(v);
    return linalg::rref(m) == dim();
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  // Deterministic total order: by dim, then basis entries row-major.
  friend bool operator<(const Subspace& a, const Subspace& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (int r = 0; r < a.dim(); ++r)
      for (int c = 0; c < a.n_; ++c) {
        if (a.rows_[r][c] != b.rows_[r][c]) return a.rows_[r][c] < b.rows_[r][c];
      }
    return false;
  }

  std::string key() const {
    std::ostringstream os;
    os << n_ << ':';
    for (const auto& row : rows_) {
      for (const auto& x : row) os << x.str() << ',';
      os << ';';
    }
    return os.str();
  }

 private:
  int n_;
  RatMat rows_;  // canonical RREF basis
};

inline void require_same_ambient(const Subspace& a, const Subspace& b, const char* op) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument(std::string(op) + ": ambient dimensions differ");
}

inline Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "sum");
  RatMat rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace(a.ambient(), std::move(rows));
}

inline Subspace orthocomplement(const Subspace& a) {
  if (a.dim() == 0) return Subspace::full(a.ambient());
  return Subspace(a.ambient(), linalg::nullspace(a.basis(), a.ambient()));
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "intersect");
  return orthocomplement(sum(orthocomplement(a), orthocomplement(b)));
}

// dim π_V(W) = dim W − dim(W ∩ V^⊥); symmetric in V and W.
inline int proj_dim(const Subspace& v, const Subspace& w) {
  require_same_ambient(v, w, "proj_dim");
  return w.dim() - intersect(w, orthocomplement(v)).dim();
}

// Exact orthogonal projector onto V: Bᵀ(BBᵀ)⁻¹B for basis rows B.
inline RatMat projection_matrix(const Subspace& v) {
  const int n = v.ambient();
  if (v.dim() == 0) return RatMat(n, RatVec(n, Rational(0)));
  const RatMat& b = v.basis();
  const RatMat bt = linalg::transpose(b);
  const RatMat gram_inv = linalg::invert(linalg::multiply(b, bt));
  return linalg::multiply(linalg::multiply(bt, gram_inv), b);
}

// Image of V under the dual of the diagonal dilation x ↦ diag(scale)·x,
// i.e. (L(V^⊥))^⊥.  Dimension is preserved; reciprocal scales undo it.
inline Subspace rescale_star(const Subspace& v, const RatVec& scale) {
  if (static_cast<int>(scale.size()) != v.ambient())
    throw std::invalid_argument("rescale_star: scale length mismatch");
  for (const auto& s : scale) {
    if (s <= 0) throw std::domain_error("rescale_star: scale entries must be positive");
  }
  const Subspace perp = orthocomplement(v);
  RatMat scaled = perp.basis();
  for (auto& row : scaled)
    for (int c = 0; c < v.ambient(); ++c) row[c] *= scale[c];
  return orthocomplement(Subspace(v.ambient(), std::move(scaled)));
}

// File format: line 1 "n d", then d rows of n rationals.  The basis is
// canonicalized on load, so round-tripping normalizes.
inline void write_subspace(std::ostream& os, const Subspace& v) {
  os << v.ambient() << ' ' << v.dim() << '\n';
  for (const auto& row : v.basis()) {
    for (int c = 0; c < v.ambient(); ++c) os << (c ? " " : "") << format_rational(row[c]);
    os << '\n';
  }
}

inline Subspace read_subspace(std::istream& is) {
  int n = 0, d = 0;
  if (!(is >> n >> d)) throw std::invalid_argument("subspace file: missing 'n d' header");
  if (n <= 0 || d < 0 || d > n) throw std::invalid_argument("subspace file: bad dimensions");
  RatMat rows(d, RatVec(n));
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < n; ++c) {
      std::string tok;
      if (!(is >> tok)) throw std::invalid_argument("subspace file: truncated basis row");
      rows[r][c] = parse_rational(tok);
    }
  return Subspace(n, std::move(rows));
}

// Uniform random k-plane with integer coordinates; entries are drawn from
// a range wide enough that degenerate incidences are not observed in
// seeded test runs.
inline Subspace random_subspace(std::mt19937_64& rng, int n, int k, long long range = 1000000) {
  std::uniform_int_distribution<long long> dist(-range, range);
  while (true) {
    RatMat rows(k, RatVec(n));
    for (auto& row : rows)
      for (auto& x : row) x = Rational(dist(rng));
    Subspace s(n, rows);
    if (s.dim() == k) return s;
  }
}

}  // namespace exproj
