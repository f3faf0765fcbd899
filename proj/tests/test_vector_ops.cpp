#include <cmath>
#include <random>

#include <doctest.h>

#include "axokern/vector_ops.hpp"
#include "reference.hpp"

using namespace axokern;

namespace {

template <typename Fn>
void expect_error(ErrorCode code, Fn&& fn) {
  try {
    fn();
    FAIL_CHECK("expected KernelError " << to_string(code));
  } catch (const KernelError& e) {
    CHECK(e.code() == code);
  }
}

}  // namespace

TEST_CASE("additive vector operations") {
  CHECK(V3{1, 2, 3} + V3{4, 5, 6} == V3{5, 7, 9});
  const V3 v{3.5f, -2.0f, 7.25f};
  CHECK(v - v == V3{});
  CHECK(-(-v) == v);
  CHECK(V2{1, 2} + V2{-1, -2} == V2{});
}

TEST_CASE("scalar scaling") {
  CHECK(V2{1, -2} * 3.0f == V2{3, -6});
  const V3 v{0.5f, 4.0f, -8.0f};
  CHECK(v * 1.0f == v);
  CHECK(v * 0.0f == V3{});
  CHECK(2.0f * v == v * 2.0f);
}

TEST_CASE("scale_run multiplies only the requested run") {
  Float buf[] = {1, 2, 3, 4};
  scale_run(buf, 1, 2, 10.0f);
  CHECK(buf[0] == 1.0f);
  CHECK(buf[1] == 20.0f);
  CHECK(buf[2] == 30.0f);
  CHECK(buf[3] == 4.0f);

  scale_run(buf, 2, 0, 100.0f);  // empty run
  CHECK(buf[2] == 30.0f);
}

TEST_CASE("scale_run over all matrix elements equals matrix scaling") {
  M23 m{{1, -2, 3, -4, 5, -6}};
  const M23 scaled = m * 2.5f;
  scale_run(m.elems(), 0, M23::kSize, 2.5f);
  CHECK(m == scaled);
}

TEST_CASE("dot products") {
  CHECK(dot(V3{1, 2, 3}, V3{4, 5, 6}) == 32.0f);
  CHECK(dot(V2{3, 9}, V2{}) == 0.0f);

  std::mt19937 rng(21);
  std::uniform_real_distribution<float> dist(-100.0f, 100.0f);
  for (int i = 0; i < 1000; ++i) {
    const V3 a{dist(rng), dist(rng), dist(rng)};
    const V3 b{dist(rng), dist(rng), dist(rng)};
    CHECK(dot(a, b) == dot(b, a));
  }
}

TEST_CASE("perp_dot basics") {
  // Distance of point (3,4) from the X axis.
  CHECK(perp_dot(V2{3, 4}, V2{1, 0}) == 4.0f);

  std::mt19937 rng(22);
  std::uniform_real_distribution<float> dist(-100.0f, 100.0f);
  for (int i = 0; i < 1000; ++i) {
    const V2 y{dist(rng), dist(rng)};
    CHECK(perp_dot(y, y) == 0.0f);
    const V2 x{dist(rng), dist(rng)};
    CHECK(perp_dot(x, y) == -perp_dot(y, x));
    CHECK(perp_dot(x * 2.0f, y) == doctest::Approx(2.0f * perp_dot(x, y)));
  }
}

TEST_CASE("perp_dot against a unit vector measures point-line distance") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<float> dist(-1000.0f, 1000.0f);
  for (int i = 0; i < 1000; ++i) {
    const V2 x{dist(rng), dist(rng)};
    V2 raw{dist(rng), dist(rng)};
    if (length(raw) < 1.0f) raw = V2{1.0f, 0.5f};
    const V2 y = ort(raw);
    // Orthogonal-projection residual, double precision.
    const refmath::Vec2 xd{x.x, x.y};
    const refmath::Vec2 yd{y.x, y.y};
    const double along = refmath::dot(xd, yd);
    const double residual =
        refmath::length(refmath::sub(xd, refmath::scale(yd, along)));
    CHECK(std::fabs(std::fabs(perp_dot(x, y)) - residual) <= 1e-4);
  }
}

TEST_CASE("lengths, orts, distances") {
  CHECK(length(V3{3, 4, 12}) == 13.0f);
  CHECK(direction_ort(V3{1, 1, 1}, V3{1, 1, 5}) == V3{0, 0, 1});

  std::mt19937 rng(24);
  std::uniform_real_distribution<float> dist(-500.0f, 500.0f);
  for (int i = 0; i < 1000; ++i) {
    V2 v{dist(rng), dist(rng)};
    if (length(v) < 0.01f) continue;
    CHECK(std::fabs(length(ort(v)) - 1.0f) <= 1e-5f);

    const V3 a{dist(rng), dist(rng), dist(rng)};
    const V3 b{dist(rng), dist(rng), dist(rng)};
    CHECK(distance(a, b) == length(b - a));  // same code path, bit-equal
  }
}

TEST_CASE("ort of a near-zero vector is degenerate") {
  expect_error(ErrorCode::kDegenerateVector, [] { ort(V3{}); });
  expect_error(ErrorCode::kDegenerateVector,
               [] { direction_ort(V2{1, 1}, V2{1, 1}); });
}

TEST_CASE("cross product") {
  CHECK(cross(V3{1, 0, 0}, V3{0, 1, 0}) == V3{0, 0, 1});
  CHECK(cross(V3{2, -3, 4}, V3{2, -3, 4}) == V3{});

  std::mt19937 rng(25);
  std::uniform_real_distribution<float> dist(-100.0f, 100.0f);
  for (int i = 0; i < 1000; ++i) {
    const V3 a{dist(rng), dist(rng), dist(rng)};
    const V3 b{dist(rng), dist(rng), dist(rng)};
    const Float bound = 1e-3f * length(a) * length(b);
    CHECK(std::fabs(dot(cross(a, b), a)) <= bound);
    CHECK(std::fabs(dot(cross(a, b), b)) <= bound);
  }
}

TEST_CASE("collinear_scalar recovers the factor") {
  const auto k = collinear_scalar(V3{2, 0, -4}, V3{-1, 0, 2});
  REQUIRE(k.has_value());
  CHECK(*k == -0.5f);

  CHECK(collinear_scalar(V3{5, -1, 2}, V3{}) == 0.0f);
}

TEST_CASE("collinear_scalar rejects a non-collinear pair") {
  // Residual of the best fit is ~0.0598, far above 1e-5 * max(1, |y|).
  const refmath::Vec3 x{1, 2, 3};
  const refmath::Vec3 y{1, 2, 3.1};
  CHECK(refmath::collinear_residual(x, y) > 10.0 * 1e-5 * refmath::length(y));
  CHECK(!collinear_scalar(V3{1, 2, 3}, V3{1, 2, 3.1f}, Tolerance{1e-5f}));
}

TEST_CASE("collinear_scalar round-trips random factors") {
  std::mt19937 rng(26);
  std::uniform_real_distribution<float> comp(-1000.0f, 1000.0f);
  std::uniform_real_distribution<float> logk(-3.0f, 3.0f);
  for (int i = 0; i < 2000; ++i) {
    V3 x{comp(rng), comp(rng), comp(rng)};
    if (length(x) < 1.0f) x.x += 10.0f;
    const Float k = std::pow(10.0f, logk(rng)) * (i % 2 ? 1.0f : -1.0f);
    const auto got = collinear_scalar(x, x * k, kCoordTol);
    REQUIRE(got.has_value());
    CHECK(std::fabs(*got - k) <= 1e-4f * std::fabs(k));
  }
}

TEST_CASE("collinear_scalar requires a nonzero reference vector") {
  expect_error(ErrorCode::kDegenerateVector,
               [] { collinear_scalar(V3{}, V3{1, 2, 3}); });
}
