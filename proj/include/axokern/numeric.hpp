#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <span>

namespace axokern {

// Coordinates are stored as 4-byte floats so documents stay compact. Every
// operation may widen internally but rounds its result back to this width.
using Float = float;
static_assert(sizeof(Float) == 4);

// Absolute comparison threshold, in the unit of the compared quantity.
// The boundary is inclusive: eps = 0 means exact equality.
struct Tolerance {
  Float eps;
};

// 1e-3 mm sits safely above single-precision rounding noise at drawing scale.
inline constexpr Tolerance kCoordTol{1e-3f};
// Unit-vector components are O(1), so a tighter bound applies.
inline constexpr Tolerance kOrtTol{1e-5f};

struct V2 {
  Float x = 0.0f;
  Float y = 0.0f;

  Float& operator[](std::size_t i) {
    assert(i < 2);
    return (&x)[i];
  }
  Float operator[](std::size_t i) const {
    assert(i < 2);
    return (&x)[i];
  }

  friend bool operator==(const V2&, const V2&) = default;
};

struct V3 {
  Float x = 0.0f;
  Float y = 0.0f;
  Float z = 0.0f;

  Float& operator[](std::size_t i) {
    assert(i < 3);
    return (&x)[i];
  }
  Float operator[](std::size_t i) const {
    assert(i < 3);
    return (&x)[i];
  }

  friend bool operator==(const V3&, const V3&) = default;
};

// Row-major fixed-size matrix; element (r, c) sits at flat index r * C + c.
template <std::size_t R, std::size_t C>
struct Mat {
  std::array<Float, R * C> m{};

  static constexpr std::size_t kRows = R;
  static constexpr std::size_t kCols = C;
  static constexpr std::size_t kSize = R * C;

  Float& operator[](std::size_t i) {
    assert(i < kSize);
    return m[i];
  }
  Float operator[](std::size_t i) const {
    assert(i < kSize);
    return m[i];
  }
  Float& operator()(std::size_t r, std::size_t c) {
    assert(r < R && c < C);
    return m[r * C + c];
  }
  Float operator()(std::size_t r, std::size_t c) const {
    assert(r < R && c < C);
    return m[r * C + c];
  }

  std::span<Float, kSize> elems() { return std::span<Float, kSize>(m); }
  std::span<const Float, kSize> elems() const {
    return std::span<const Float, kSize>(m);
  }

  friend bool operator==(const Mat&, const Mat&) = default;
};

using M22 = Mat<2, 2>;
using M23 = Mat<2, 3>;
using M32 = Mat<3, 2>;
using M33 = Mat<3, 3>;

inline bool is_zero(Float v, Tolerance tol) { return std::fabs(v) <= tol.eps; }

inline bool is_one(Float v, Tolerance tol) {
  return std::fabs(v - 1.0f) <= tol.eps;
}

// Componentwise equality. Reflexive and symmetric, not transitive.
inline bool v_eq(const V2& a, const V2& b, Tolerance tol) {
  return is_zero(a.x - b.x, tol) && is_zero(a.y - b.y, tol);
}

inline bool v_eq(const V3& a, const V3& b, Tolerance tol) {
  return is_zero(a.x - b.x, tol) && is_zero(a.y - b.y, tol) &&
         is_zero(a.z - b.z, tol);
}

}  // namespace axokern
