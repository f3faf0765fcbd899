#pragma once

#include <algorithm>
#include <cmath>
#include <optional>

#include "axokern/errors.hpp"
#include "axokern/numeric.hpp"

namespace axokern {

namespace detail {
inline double widen(Float v) { return static_cast<double>(v); }
}  // namespace detail

inline V2 operator-(const V2& v) { return {-v.x, -v.y}; }
inline V3 operator-(const V3& v) { return {-v.x, -v.y, -v.z}; }

inline V2 operator+(const V2& a, const V2& b) { return {a.x + b.x, a.y + b.y}; }
inline V3 operator+(const V3& a, const V3& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}

inline V2 operator-(const V2& a, const V2& b) { return {a.x - b.x, a.y - b.y}; }
inline V3 operator-(const V3& a, const V3& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}

inline V2 operator*(const V2& v, Float s) { return {v.x * s, v.y * s}; }
inline V3 operator*(const V3& v, Float s) {
  return {v.x * s, v.y * s, v.z * s};
}
inline V2 operator*(Float s, const V2& v) { return v * s; }
inline V3 operator*(Float s, const V3& v) { return v * s; }

template <std::size_t R, std::size_t C>
Mat<R, C> operator*(const Mat<R, C>& m, Float s) {
  Mat<R, C> out = m;
  for (auto& e : out.m) e *= s;
  return out;
}

// Multiplies count consecutive elements starting at start in place.
inline void scale_run(std::span<Float> buffer, std::size_t start,
                      std::size_t count, Float s) {
  assert(start <= buffer.size() && count <= buffer.size() - start);
  for (std::size_t i = start; i < start + count; ++i) buffer[i] *= s;
}

inline Float dot(const V2& a, const V2& b) {
  return static_cast<Float>(detail::widen(a.x) * b.x +
                            detail::widen(a.y) * b.y);
}

inline Float dot(const V3& a, const V3& b) {
  return static_cast<Float>(detail::widen(a.x) * b.x +
                            detail::widen(a.y) * b.y +
                            detail::widen(a.z) * b.z);
}

// X against Y rotated 90 degrees counterclockwise: x.y*y.x - x.x*y.y.
// |result| is the distance from point X to the line along Y when Y is an ort.
inline Float perp_dot(const V2& x, const V2& y) {
  return static_cast<Float>(detail::widen(x.y) * y.x -
                            detail::widen(x.x) * y.y);
}

inline Float length(const V2& v) {
  return static_cast<Float>(
      std::sqrt(detail::widen(v.x) * v.x + detail::widen(v.y) * v.y));
}

inline Float length(const V3& v) {
  return static_cast<Float>(std::sqrt(detail::widen(v.x) * v.x +
                                      detail::widen(v.y) * v.y +
                                      detail::widen(v.z) * v.z));
}

inline Float distance(const V2& a, const V2& b) { return length(b - a); }
inline Float distance(const V3& a, const V3& b) { return length(b - a); }

inline V2 ort(const V2& v, Tolerance tol = kCoordTol) {
  const double len =
      std::sqrt(detail::widen(v.x) * v.x + detail::widen(v.y) * v.y);
  if (len < tol.eps) fail(ErrorCode::kDegenerateVector, "ort of near-zero V2");
  return {static_cast<Float>(v.x / len), static_cast<Float>(v.y / len)};
}

inline V3 ort(const V3& v, Tolerance tol = kCoordTol) {
  const double len =
      std::sqrt(detail::widen(v.x) * v.x + detail::widen(v.y) * v.y +
                detail::widen(v.z) * v.z);
  if (len < tol.eps) fail(ErrorCode::kDegenerateVector, "ort of near-zero V3");
  return {static_cast<Float>(v.x / len), static_cast<Float>(v.y / len),
          static_cast<Float>(v.z / len)};
}

inline V2 direction_ort(const V2& a, const V2& b, Tolerance tol = kCoordTol) {
  return ort(b - a, tol);
}

inline V3 direction_ort(const V3& a, const V3& b, Tolerance tol = kCoordTol) {
  return ort(b - a, tol);
}

inline V3 cross(const V3& a, const V3& b) {
  return {static_cast<Float>(detail::widen(a.y) * b.z -
                             detail::widen(a.z) * b.y),
          static_cast<Float>(detail::widen(a.z) * b.x -
                             detail::widen(a.x) * b.z),
          static_cast<Float>(detail::widen(a.x) * b.y -
                             detail::widen(a.y) * b.x)};
}

// Scalar k with y = k * x for collinear x, y. The residual |y - k*x| is
// accepted up to tol.eps * max(1, |y|); nullopt when it is larger.
inline std::optional<Float> collinear_scalar(const V3& x, const V3& y,
                                             Tolerance tol = kOrtTol) {
  const double xx = detail::widen(x.x) * x.x + detail::widen(x.y) * x.y +
                    detail::widen(x.z) * x.z;
  if (std::sqrt(xx) < tol.eps)
    fail(ErrorCode::kDegenerateVector, "collinear_scalar: x is near zero");
  const double k = (detail::widen(x.x) * y.x + detail::widen(x.y) * y.y +
                    detail::widen(x.z) * y.z) /
                   xx;
  const double rx = y.x - k * x.x;
  const double ry = y.y - k * x.y;
  const double rz = y.z - k * x.z;
  const double residual = std::sqrt(rx * rx + ry * ry + rz * rz);
  const double len_y = std::sqrt(detail::widen(y.x) * y.x +
                                 detail::widen(y.y) * y.y +
                                 detail::widen(y.z) * y.z);
  if (residual > detail::widen(tol.eps) * std::max(1.0, len_y))
    return std::nullopt;
  return static_cast<Float>(k);
}

}  // namespace axokern
