#pragma once

#include <cmath>
#include <vector>

#include "exproj/subspace.hpp"

namespace exproj {

using DVec = std::vector<double>;
using DMat = std::vector<DVec>;

// A k-plane near the origin: direction ∈ G(k,n) plus an offset in the
// direction's orthocomplement with |offset| ≤ 1/2.  Both constraints are
// checked exactly; constructors reject rather than renormalize.
class AffinePlane {
 public:
  AffinePlane(Subspace direction, RatVec offset)
      : dir_(std::move(direction)), offset_(std::move(offset)) {
    if (static_cast<int>(offset_.size()) != dir_.ambient())
      throw std::invalid_argument("AffinePlane: offset length mismatch");
    for (const auto& row : dir_.basis()) {
      if (linalg::dot(row, offset_) != 0)
        throw std::invalid_argument("AffinePlane: offset not orthogonal to direction");
    }
    if (linalg::dot(offset_, offset_) > Rational(1, 4))
      throw std::invalid_argument("AffinePlane: |offset| exceeds 1/2");
  }

  const Subspace& direction() const { return dir_; }
  const RatVec& offset() const { return offset_; }
  int ambient() const { return dir_.ambient(); }
  int dim() const { return dir_.dim(); }

 private:
  Subspace dir_;
  RatVec offset_;
};

// r-neighborhood of a plane clipped to the unit ball.
class Slab {
 public:
  Slab(AffinePlane plane, double radius) : plane_(std::move(plane)), radius_(radius) {
    if (!(radius > 0.0 && radius < 1.0)) throw std::invalid_argument("Slab: radius must be in (0,1)");
  }
  const AffinePlane& plane() const { return plane_; }
  double radius() const { return radius_; }

 private:
  AffinePlane plane_;
  double radius_;
};

namespace detail {

inline DMat to_double_matrix(const RatMat& m) {
  DMat out(m.size());
  for (size_t r = 0; r < m.size(); ++r) {
    out[r].resize(m[r].size());
    for (size_t c = 0; c < m[r].size(); ++c) out[r][c] = to_double(m[r][c]);
  }
  return out;
}

inline DVec to_double_vector(const RatVec& v) {
  DVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
  return out;
}

// Cyclic Jacobi sweeps on a symmetric matrix; returns the eigenvalues on
// the diagonal.  Off-diagonal mass below 1e-12 of the initial scale
// terminates; dimensions here are tiny so convergence is immediate.
inline DVec jacobi_eigenvalues(DMat a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return {};
  double scale = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scale = std::max(scale, std::fabs(a[i][j]));
  if (scale == 0.0) return DVec(n, 0.0);
  const double tol = 1e-12 * scale;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off = std::max(off, std::fabs(a[i][j]));
    if (off < tol) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::fabs(a[p][q]) < tol * 1e-3) continue;
        const double theta = 0.5 * std::atan2(2.0 * a[p][q], a[q][q] - a[p][p]);
        const double c = std::cos(theta), s = std::sin(theta);
        for (int i = 0; i < n; ++i) {
          const double apv = a[i][p], aqv = a[i][q];
          a[i][p] = c * apv - s * aqv;
          a[i][q] = s * apv + c * aqv;
        }
        for (int i = 0; i < n; ++i) {
          const double apv = a[p][i], aqv = a[q][i];
          a[p][i] = c * apv - s * aqv;
          a[q][i] = s * apv + c * aqv;
        }
      }
  }
  DVec eig(n);
  for (int i = 0; i < n; ++i) eig[i] = a[i][i];
  return eig;
}

inline double max_abs_eigenvalue(const DMat& a) {
  double best = 0.0;
  for (double e : jacobi_eigenvalues(a)) best = std::max(best, std::fabs(e));
  return best;
}

inline double max_eigenvalue(const DMat& a) {
  double best = 0.0;
  for (double e : jacobi_eigenvalues(a)) best = std::max(best, e);
  return best;
}

inline DMat dsub(const DMat& a, const DMat& b) {
  DMat out = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) out[i][j] -= b[i][j];
  return out;
}

inline DMat dmul(const DMat& a, const DMat& b) {
  DMat out(a.size(), DVec(b[0].size(), 0.0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k) {
      const double v = a[i][k];
      if (v == 0.0) continue;
      for (size_t j = 0; j < b[0].size(); ++j) out[i][j] += v * b[k][j];
    }
  return out;
}

inline DMat didentity(int n) {
  DMat m(n, DVec(n, 0.0));
  for (int i = 0; i < n; ++i) m[i][i] = 1.0;
  return m;
}

inline double norm2(const DVec& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

inline DVec dapply(const DMat& m, const DVec& v) {
  DVec out(m.size(), 0.0);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

}  // namespace detail

// Operator-norm distance ‖π_{V1} − π_{V2}‖ on G(k,n).  The projectors are
// exact; only the eigenvalue extraction is floating point.
inline double metric_d(const Subspace& v1, const Subspace& v2) {
  require_same_ambient(v1, v2, "metric_d");
  if (v1.dim() != v2.dim()) throw std::invalid_argument("metric_d: subspace dimensions differ");
  const DMat p1 = detail::to_double_matrix(projection_matrix(v1));
  const DMat p2 = detail::to_double_matrix(projection_matrix(v2));
  return detail::max_abs_eigenvalue(detail::dsub(p1, p2));
}

// Smallest ρ with B(0,1) ∩ V1 ⊂ N_ρ(V2), i.e. ‖(I − π_{V2})π_{V1}‖.
inline double metric_rho(const Subspace& v1, const Subspace& v2) {
  require_same_ambient(v1, v2, "metric_rho");
  if (v1.dim() != v2.dim()) throw std::invalid_argument("metric_rho: subspace dimensions differ");
  const int n = v1.ambient();
  const DMat p1 = detail::to_double_matrix(projection_matrix(v1));
  const DMat p2 = detail::to_double_matrix(projection_matrix(v2));
  const DMat q2 = detail::dsub(detail::didentity(n), p2);
  // ‖(I-P2)P1‖² = λ_max(P1(I-P2)P1) since I-P2 is an orthogonal projector.
  const DMat m = detail::dmul(detail::dmul(p1, q2), p1);
  return std::sqrt(std::max(0.0, detail::max_eigenvalue(m)));
}

// Metric on nearby k-planes: direction distance plus offset distance.
inline double metric_d(const AffinePlane& v1, const AffinePlane& v2) {
  if (v1.ambient() != v2.ambient()) throw std::invalid_argument("metric_d: ambient dimensions differ");
  RatVec diff(v1.offset());
  for (size_t i = 0; i < diff.size(); ++i) diff[i] -= v2.offset()[i];
  const double offset_dist = std::sqrt(to_double(linalg::dot(diff, diff)));
  return metric_d(v1.direction(), v2.direction()) + offset_dist;
}

// ρ for affine planes: the direction part acts on a ball of radius
// √(1−|x_V|²), and the offset contributes its component transverse to
// the target direction.
inline double metric_rho(const AffinePlane& v1, const AffinePlane& v2) {
  if (v1.ambient() != v2.ambient()) throw std::invalid_argument("metric_rho: ambient dimensions differ");
  const int n = v1.ambient();
  const DMat p2 = detail::to_double_matrix(projection_matrix(v2.direction()));
  const DMat q2 = detail::dsub(detail::didentity(n), p2);
  DVec delta = detail::to_double_vector(v1.offset());
  const DVec x2 = detail::to_double_vector(v2.offset());
  for (int i = 0; i < n; ++i) delta[i] -= x2[i];
  const double offset_part = detail::norm2(detail::dapply(q2, delta));
  const double x1_norm2 = to_double(linalg::dot(v1.offset(), v1.offset()));
  const double shrink = std::sqrt(std::max(0.0, 1.0 - x1_norm2));
  return offset_part + shrink * metric_rho(v1.direction(), v2.direction());
}

// sin of the principal angle between two lines; reference value for the
// line case of metric_d.
inline double line_angle_sin(const RatVec& u, const RatVec& v) {
  const double uu = to_double(linalg::dot(u, u));
  const double vv = to_double(linalg::dot(v, v));
  const double uv = to_double(linalg::dot(u, v));
  const double c2 = (uv * uv) / (uu * vv);
  return std::sqrt(std::max(0.0, 1.0 - c2));
}

// x ∈ V_r ⇔ |x| ≤ 1 and dist(x, plane) ≤ r.
inline bool slab_membership(const Slab& slab, const DVec& x) {
  if (static_cast<int>(x.size()) != slab.plane().ambient())
    throw std::invalid_argument("slab_membership: dimension mismatch");
  if (detail::norm2(x) > 1.0) return false;
  const int n = slab.plane().ambient();
  const DMat p = detail::to_double_matrix(projection_matrix(slab.plane().direction()));
  const DMat q = detail::dsub(detail::didentity(n), p);
  DVec rel = x;
  const DVec off = detail::to_double_vector(slab.plane().offset());
  DVec qx = detail::dapply(q, rel);
  for (int i = 0; i < n; ++i) qx[i] -= off[i];
  return detail::norm2(qx) <= slab.radius();
}

}  // namespace exproj
