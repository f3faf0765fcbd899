#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "axokern/errors.hpp"
#include "axokern/linear_maps.hpp"
#include "axokern/numeric.hpp"
#include "axokern/vector_ops.hpp"

namespace axokern {

// Signed coordinate axis: 1 is +X, 2 is +Y, 3 is +Z, negatives mirror.
enum class AxisIndex : int {
  kPosX = 1,
  kPosY = 2,
  kPosZ = 3,
  kNegX = -1,
  kNegY = -2,
  kNegZ = -3,
};

constexpr bool is_axis_index(int raw) { return raw != 0 && raw >= -3 && raw <= 3; }

constexpr AxisIndex negated(AxisIndex k) {
  return static_cast<AxisIndex>(-static_cast<int>(k));
}

inline V3 axis_ort(AxisIndex k) {
  switch (k) {
    case AxisIndex::kPosX: return {1.0f, 0.0f, 0.0f};
    case AxisIndex::kPosY: return {0.0f, 1.0f, 0.0f};
    case AxisIndex::kPosZ: return {0.0f, 0.0f, 1.0f};
    case AxisIndex::kNegX: return {-1.0f, 0.0f, 0.0f};
    case AxisIndex::kNegY: return {0.0f, -1.0f, 0.0f};
    case AxisIndex::kNegZ: return {0.0f, 0.0f, -1.0f};
  }
  assert(false);
  return {};
}

// The signed axis v points along, or nullopt when v is not axis-aligned
// within tol. Invariant under positive scaling of v.
inline std::optional<AxisIndex> axis_index(const V3& v,
                                           Tolerance tol = kOrtTol) {
  const V3 u = ort(v, tol);
  int axis = 1;
  Float best = std::fabs(u.x);
  if (std::fabs(u.y) > best) {
    axis = 2;
    best = std::fabs(u.y);
  }
  if (std::fabs(u.z) > best) axis = 3;
  const Float component = u[static_cast<std::size_t>(axis - 1)];
  const auto k = static_cast<AxisIndex>(component < 0.0f ? -axis : axis);
  if (!v_eq(u, axis_ort(k), tol)) return std::nullopt;
  return k;
}

enum class OffsetMode { kAll, kGeneralOnly, kLocalOnly, kNone };

// Displaces the positive half-space of the plane by a fixed vector.
struct GeneralOffset {
  OrientedPlane plane;
  V3 displacement;  // mm; its component along plane.n must be >= 0 for the
                    // ReIn -> ReVi transform to stay invertible
};

// Displaces a named branch (explicit pipe-id set) by a fixed vector.
struct LocalOffset {
  std::vector<std::string> pipes;
  V3 displacement;
};

// Offsets apply in list order, general list first, then local list.
// Each general offset tests the point as displaced so far.
struct OffsetContext {
  std::vector<GeneralOffset> general;
  std::vector<LocalOffset> local;
  OffsetMode mode = OffsetMode::kAll;
};

inline bool applies_to(const LocalOffset& off, std::string_view membership) {
  return std::find(off.pipes.begin(), off.pipes.end(), membership) !=
         off.pipes.end();
}

inline bool mode_uses_general(OffsetMode mode) {
  return mode == OffsetMode::kAll || mode == OffsetMode::kGeneralOnly;
}

inline bool mode_uses_local(OffsetMode mode) {
  return mode == OffsetMode::kAll || mode == OffsetMode::kLocalOnly;
}

// ReIn -> ReVi. A general offset displaces the point when it lies strictly
// beyond the plane (side > eps) at the moment that offset is processed;
// points within eps of a plane stay put, so junctions remain shared. A local
// offset displaces the point when membership names a pipe in its set.
inline V3 to_revi(const V3& p, const OffsetContext& ctx,
                  std::string_view membership = {},
                  Tolerance tol = kCoordTol) {
  double qx = p.x, qy = p.y, qz = p.z;
  if (mode_uses_general(ctx.mode)) {
    for (const GeneralOffset& g : ctx.general) {
      const double side = qx * g.plane.n.x + qy * g.plane.n.y +
                          qz * g.plane.n.z - g.plane.c;
      if (side > tol.eps) {
        qx += g.displacement.x;
        qy += g.displacement.y;
        qz += g.displacement.z;
      }
    }
  }
  if (mode_uses_local(ctx.mode) && !membership.empty()) {
    for (const LocalOffset& l : ctx.local) {
      if (applies_to(l, membership)) {
        qx += l.displacement.x;
        qy += l.displacement.y;
        qz += l.displacement.z;
      }
    }
  }
  return {static_cast<Float>(qx), static_cast<Float>(qy),
          static_cast<Float>(qz)};
}

// ReVi -> ReIn, the exact inverse of to_revi away from plane neighborhoods.
// Lists are undone back to front; each general offset tests the point with
// that offset's displacement hypothetically removed. When the un-shifted
// point lands within eps of the plane the original side cannot be recovered.
inline V3 from_revi(const V3& p, const OffsetContext& ctx,
                    std::string_view membership = {},
                    Tolerance tol = kCoordTol) {
  double qx = p.x, qy = p.y, qz = p.z;
  if (mode_uses_local(ctx.mode) && !membership.empty()) {
    for (auto it = ctx.local.rbegin(); it != ctx.local.rend(); ++it) {
      if (applies_to(*it, membership)) {
        qx -= it->displacement.x;
        qy -= it->displacement.y;
        qz -= it->displacement.z;
      }
    }
  }
  if (mode_uses_general(ctx.mode)) {
    for (auto it = ctx.general.rbegin(); it != ctx.general.rend(); ++it) {
      const double cx = qx - it->displacement.x;
      const double cy = qy - it->displacement.y;
      const double cz = qz - it->displacement.z;
      const double side = cx * it->plane.n.x + cy * it->plane.n.y +
                          cz * it->plane.n.z - it->plane.c;
      if (std::fabs(side) <= tol.eps)
        fail(ErrorCode::kAmbiguousInverse,
             "from_revi: point lies on an offset plane after un-shifting");
      if (side > 0.0) {
        qx = cx;
        qy = cy;
        qz = cz;
      }
    }
  }
  return {static_cast<Float>(qx), static_cast<Float>(qy),
          static_cast<Float>(qz)};
}

// ReVi -> Paper: project, divide by the title-block scale denominator
// (drawing scale 1:N), then move to the drawing anchor. Result in Paper mm.
inline V2 revi_to_paper(const V3& p, const ProjectionOp& proj, const V2& anchor,
                        Float scale_denominator) {
  if (!(scale_denominator > 0.0f))
    fail(ErrorCode::kInvalidScale,
         "revi_to_paper: scale denominator must be positive");
  const double n = scale_denominator;
  const double px = detail::widen(proj.m[0]) * p.x +
                    detail::widen(proj.m[1]) * p.y +
                    detail::widen(proj.m[2]) * p.z + proj.shift.x;
  const double py = detail::widen(proj.m[3]) * p.x +
                    detail::widen(proj.m[4]) * p.y +
                    detail::widen(proj.m[5]) * p.z + proj.shift.y;
  return {static_cast<Float>(px / n + anchor.x),
          static_cast<Float>(py / n + anchor.y)};
}

}  // namespace axokern
