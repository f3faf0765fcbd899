#pragma once

// Double-precision brute-force reference implementations. Kept independent
// of the kernel headers on purpose: plain arrays, no shared code path.

#include <array>
#include <cmath>
#include <cstddef>

namespace refmath {

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;
using Mat22 = std::array<double, 4>;
using Mat23 = std::array<double, 6>;
using Mat32 = std::array<double, 6>;
using Mat33 = std::array<double, 9>;

inline Vec2 add(const Vec2& a, const Vec2& b) { return {a[0] + b[0], a[1] + b[1]}; }
inline Vec3 add(const Vec3& a, const Vec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline Vec2 sub(const Vec2& a, const Vec2& b) { return {a[0] - b[0], a[1] - b[1]}; }
inline Vec3 sub(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline Vec2 scale(const Vec2& v, double s) { return {v[0] * s, v[1] * s}; }
inline Vec3 scale(const Vec3& v, double s) {
  return {v[0] * s, v[1] * s, v[2] * s};
}

inline double dot(const Vec2& a, const Vec2& b) {
  return a[0] * b[0] + a[1] * b[1];
}
inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double perp_dot(const Vec2& x, const Vec2& y) {
  return x[1] * y[0] - x[0] * y[1];
}

inline double length(const Vec2& v) { return std::sqrt(dot(v, v)); }
inline double length(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline double distance(const Vec3& a, const Vec3& b) { return length(sub(b, a)); }
inline double distance(const Vec2& a, const Vec2& b) { return length(sub(b, a)); }

inline Vec2 ort(const Vec2& v) { return scale(v, 1.0 / length(v)); }
inline Vec3 ort(const Vec3& v) { return scale(v, 1.0 / length(v)); }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

inline double collinear_k(const Vec3& x, const Vec3& y) {
  return dot(x, y) / dot(x, x);
}

// Residual of the best collinear fit y ~ k*x.
inline double collinear_residual(const Vec3& x, const Vec3& y) {
  const double k = collinear_k(x, y);
  return length(sub(y, scale(x, k)));
}

inline Vec2 mul(const Mat22& m, const Vec2& v) {
  return {m[0] * v[0] + m[1] * v[1], m[2] * v[0] + m[3] * v[1]};
}
inline Vec2 mul(const Mat23& m, const Vec3& v) {
  return {m[0] * v[0] + m[1] * v[1] + m[2] * v[2],
          m[3] * v[0] + m[4] * v[1] + m[5] * v[2]};
}
inline Vec3 mul(const Mat32& m, const Vec2& v) {
  return {m[0] * v[0] + m[1] * v[1], m[2] * v[0] + m[3] * v[1],
          m[4] * v[0] + m[5] * v[1]};
}
inline Vec3 mul(const Mat33& m, const Vec3& v) {
  return {m[0] * v[0] + m[1] * v[1] + m[2] * v[2],
          m[3] * v[0] + m[4] * v[1] + m[5] * v[2],
          m[6] * v[0] + m[7] * v[1] + m[8] * v[2]};
}

inline Mat22 mul(const Mat23& a, const Mat32& b) {
  Mat22 out{};
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c)
      out[r * 2 + c] =
          a[r * 3] * b[c] + a[r * 3 + 1] * b[2 + c] + a[r * 3 + 2] * b[4 + c];
  return out;
}

inline double det(const Mat22& m) { return m[0] * m[3] - m[1] * m[2]; }

}  // namespace refmath
