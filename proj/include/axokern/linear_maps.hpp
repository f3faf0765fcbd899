#pragma once

#include <cmath>

#include "axokern/errors.hpp"
#include "axokern/numeric.hpp"
#include "axokern/vector_ops.hpp"

namespace axokern {

// Oriented plane {p : dot(n, p) = c}; the positive side is dot(n, p) > c.
struct OrientedPlane {
  V3 n;      // unit normal
  Float c;   // plane coordinate along n, mm
};

inline V2 operator*(const M22& m, const V2& v) {
  return {static_cast<Float>(detail::widen(m[0]) * v.x +
                             detail::widen(m[1]) * v.y),
          static_cast<Float>(detail::widen(m[2]) * v.x +
                             detail::widen(m[3]) * v.y)};
}

inline V2 operator*(const M23& m, const V3& v) {
  return {static_cast<Float>(detail::widen(m[0]) * v.x +
                             detail::widen(m[1]) * v.y +
                             detail::widen(m[2]) * v.z),
          static_cast<Float>(detail::widen(m[3]) * v.x +
                             detail::widen(m[4]) * v.y +
                             detail::widen(m[5]) * v.z)};
}

inline V3 operator*(const M32& m, const V2& v) {
  return {static_cast<Float>(detail::widen(m[0]) * v.x +
                             detail::widen(m[1]) * v.y),
          static_cast<Float>(detail::widen(m[2]) * v.x +
                             detail::widen(m[3]) * v.y),
          static_cast<Float>(detail::widen(m[4]) * v.x +
                             detail::widen(m[5]) * v.y)};
}

inline V3 operator*(const M33& m, const V3& v) {
  return {static_cast<Float>(detail::widen(m[0]) * v.x +
                             detail::widen(m[1]) * v.y +
                             detail::widen(m[2]) * v.z),
          static_cast<Float>(detail::widen(m[3]) * v.x +
                             detail::widen(m[4]) * v.y +
                             detail::widen(m[5]) * v.z),
          static_cast<Float>(detail::widen(m[6]) * v.x +
                             detail::widen(m[7]) * v.y +
                             detail::widen(m[8]) * v.z)};
}

inline M22 operator*(const M23& a, const M32& b) {
  M22 out;
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      out(r, c) = static_cast<Float>(detail::widen(a(r, 0)) * b(0, c) +
                                     detail::widen(a(r, 1)) * b(1, c) +
                                     detail::widen(a(r, 2)) * b(2, c));
    }
  }
  return out;
}

inline Float det(const M22& m) {
  return static_cast<Float>(detail::widen(m[0]) * m[3] -
                            detail::widen(m[1]) * m[2]);
}

inline M32 from_columns(const V3& c0, const V3& c1) {
  M32 out;
  out(0, 0) = c0.x;
  out(1, 0) = c0.y;
  out(2, 0) = c0.z;
  out(0, 1) = c1.x;
  out(1, 1) = c1.y;
  out(2, 1) = c1.z;
  return out;
}

inline V3 column(const M32& m, std::size_t c) {
  assert(c < 2);
  return {m(0, c), m(1, c), m(2, c)};
}

inline V3 row(const M23& m, std::size_t r) {
  assert(r < 2);
  return {m(r, 0), m(r, 1), m(r, 2)};
}

// Affine operators between coordinate systems; apply() is m * v + shift.

// ReIn/ReVi (3D, mm) into a 2D drawing system.
struct ProjectionOp {
  V2 shift;
  M23 m;

  V2 apply(const V3& p) const {
    return {static_cast<Float>(detail::widen(m[0]) * p.x +
                               detail::widen(m[1]) * p.y +
                               detail::widen(m[2]) * p.z + shift.x),
            static_cast<Float>(detail::widen(m[3]) * p.x +
                               detail::widen(m[4]) * p.y +
                               detail::widen(m[5]) * p.z + shift.y)};
  }
};

// Block library system Li (2D) into ReIn.
struct PlacementOp {
  V3 shift;
  M32 m;

  V3 apply(const V2& q) const {
    return {static_cast<Float>(detail::widen(m[0]) * q.x +
                               detail::widen(m[1]) * q.y + shift.x),
            static_cast<Float>(detail::widen(m[2]) * q.x +
                               detail::widen(m[3]) * q.y + shift.y),
            static_cast<Float>(detail::widen(m[4]) * q.x +
                               detail::widen(m[5]) * q.y + shift.z)};
  }
};

// Li (2D) into another 2D system.
struct TransitionOp {
  V2 shift;
  M22 m;

  V2 apply(const V2& q) const {
    return {static_cast<Float>(detail::widen(m[0]) * q.x +
                               detail::widen(m[1]) * q.y + shift.x),
            static_cast<Float>(detail::widen(m[2]) * q.x +
                               detail::widen(m[3]) * q.y + shift.y)};
  }
};

// Projecting after placing equals one transition: shift = p.m*b.shift+p.shift.
inline TransitionOp compose(const ProjectionOp& p, const PlacementOp& b) {
  TransitionOp t;
  t.m = p.m * b.m;
  t.shift = p.apply(b.shift);
  return t;
}

// True when m maps the plane spanned by e1, e2 onto a line (or point):
// |det(m * [e1|e2])| <= tol.eps * |e1| * |e2|. The threshold scales with the
// basis lengths, so the verdict is invariant under positive rescaling.
inline bool plane_collapses(const M23& m, const V3& e1, const V3& e2,
                            Tolerance tol) {
  const double l1 = detail::widen(length(e1));
  const double l2 = detail::widen(length(e2));
  if (l1 < tol.eps || l2 < tol.eps)
    fail(ErrorCode::kDegenerateInput, "plane_collapses: zero basis vector");
  if (collinear_scalar(e1, e2, tol))
    fail(ErrorCode::kDegenerateInput, "plane_collapses: parallel basis vectors");
  const double u0 = detail::widen(m[0]) * e1.x + detail::widen(m[1]) * e1.y +
                    detail::widen(m[2]) * e1.z;
  const double u1 = detail::widen(m[3]) * e1.x + detail::widen(m[4]) * e1.y +
                    detail::widen(m[5]) * e1.z;
  const double v0 = detail::widen(m[0]) * e2.x + detail::widen(m[1]) * e2.y +
                    detail::widen(m[2]) * e2.z;
  const double v1 = detail::widen(m[3]) * e2.x + detail::widen(m[4]) * e2.y +
                    detail::widen(m[5]) * e2.z;
  return std::fabs(u0 * v1 - u1 * v0) <= detail::widen(tol.eps) * l1 * l2;
}

// Classical isometric axonometry with vertical Z: the axis orts map to
// X -> (sqrt(3)/2, -1/2), Y -> (-sqrt(3)/2, -1/2), Z -> (0, 1), all times
// scale. The view direction (1,1,1) projects to a point.
inline ProjectionOp default_isometric(Float scale) {
  if (!(scale > 0.0f))
    fail(ErrorCode::kInvalidScale, "default_isometric: scale must be positive");
  const Float rx = static_cast<Float>(detail::widen(scale) * std::sqrt(3.0) / 2.0);
  const Float half = scale * 0.5f;
  ProjectionOp op;
  op.shift = {0.0f, 0.0f};
  op.m = M23{{rx, -rx, 0.0f, -half, -half, scale}};
  return op;
}

}  // namespace axokern
