#include <cmath>
#include <random>

#include <doctest.h>

#include "axokern/axes_offsets.hpp"

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

constexpr AxisIndex kAllAxes[] = {AxisIndex::kPosX, AxisIndex::kPosY,
                                  AxisIndex::kPosZ, AxisIndex::kNegX,
                                  AxisIndex::kNegY, AxisIndex::kNegZ};

OffsetContext lift_ctx(Float c, Float dz) {
  OffsetContext ctx;
  ctx.general.push_back({{{0, 0, 1}, c}, {0, 0, dz}});
  return ctx;
}

}  // namespace

TEST_CASE("axis orts and negation") {
  CHECK(axis_ort(AxisIndex::kPosZ) == V3{0, 0, 1});
  CHECK(axis_ort(AxisIndex::kNegX) == V3{-1, 0, 0});
  for (AxisIndex k : kAllAxes) {
    CHECK(axis_ort(negated(k)) == -axis_ort(k));
    CHECK(negated(negated(k)) == k);
  }
}

TEST_CASE("axis_index inverts axis_ort at any positive scale") {
  for (AxisIndex k : kAllAxes) {
    for (Float s : {0.001f, 1.0f, 5000.0f}) {
      CHECK(axis_index(axis_ort(k) * s) == k);
    }
  }
}

TEST_CASE("axis_index classification") {
  CHECK(axis_index(V3{0, -5, 0.00001f}, Tolerance{1e-3f}) == AxisIndex::kNegY);
  CHECK(!axis_index(V3{1, 1, 0}, Tolerance{1e-3f}).has_value());
  expect_error(ErrorCode::kDegenerateVector, [] { axis_index(V3{}); });
}

TEST_CASE("to_revi displaces the positive half-space only") {
  const OffsetContext ctx = lift_ctx(100.0f, 50.0f);
  CHECK(to_revi(V3{0, 0, 150}, ctx) == V3{0, 0, 200});
  CHECK(to_revi(V3{0, 0, 50}, ctx) == V3{0, 0, 50});
  // A point on the plane stays shared between both sides.
  CHECK(to_revi(V3{7, -3, 100}, ctx) == V3{7, -3, 100});
}

TEST_CASE("to_revi with mode none is the identity") {
  OffsetContext ctx = lift_ctx(100.0f, 50.0f);
  ctx.local.push_back({{"P1"}, {10, 0, 0}});
  ctx.mode = OffsetMode::kNone;
  const V3 p{12, -34, 5678};
  CHECK(to_revi(p, ctx, "P1") == p);
  CHECK(from_revi(p, ctx, "P1") == p);
}

TEST_CASE("sequential general offsets accumulate") {
  // Hand-applied: (0,0,300) is above z=100, shifts to 350; 350 is above
  // z=200, shifts to 400.
  OffsetContext ctx;
  ctx.general.push_back({{{0, 0, 1}, 100.0f}, {0, 0, 50}});
  ctx.general.push_back({{{0, 0, 1}, 200.0f}, {0, 0, 50}});
  CHECK(to_revi(V3{0, 0, 300}, ctx) == V3{0, 0, 400});
  // Between the planes: only the first offset applies, which lifts the point
  // past the second plane, so it applies too.
  CHECK(to_revi(V3{0, 0, 160}, ctx) == V3{0, 0, 260});
  // Below both: untouched.
  CHECK(to_revi(V3{0, 0, 60}, ctx) == V3{0, 0, 60});
}

TEST_CASE("local offsets follow membership") {
  OffsetContext ctx;
  ctx.local.push_back({{"P1", "P2"}, {0, 250, 0}});
  ctx.local.push_back({{"P2"}, {0, 0, 40}});
  CHECK(to_revi(V3{1, 2, 3}, ctx, "P1") == V3{1, 252, 3});
  CHECK(to_revi(V3{1, 2, 3}, ctx, "P2") == V3{1, 252, 43});
  CHECK(to_revi(V3{1, 2, 3}, ctx, "P9") == V3{1, 2, 3});
  CHECK(to_revi(V3{1, 2, 3}, ctx) == V3{1, 2, 3});
  CHECK(from_revi(to_revi(V3{1, 2, 3}, ctx, "P2"), ctx, "P2") == V3{1, 2, 3});
}

TEST_CASE("from_revi inverts the half-space displacement") {
  const OffsetContext ctx = lift_ctx(100.0f, 50.0f);
  CHECK(from_revi(V3{0, 0, 200}, ctx) == V3{0, 0, 150});
  CHECK(from_revi(V3{0, 0, 50}, ctx) == V3{0, 0, 50});
}

TEST_CASE("from_revi rejects points that un-shift onto a plane") {
  const OffsetContext ctx = lift_ctx(100.0f, 50.0f);
  expect_error(ErrorCode::kAmbiguousInverse,
               [&] { from_revi(V3{0, 0, 150.0005f}, ctx); });
}

TEST_CASE("round-trip identity away from plane neighborhoods") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<float> coord(-10000.0f, 10000.0f);
  std::uniform_real_distribution<float> disp(-500.0f, 500.0f);
  std::uniform_real_distribution<float> plane_c(-5000.0f, 5000.0f);
  std::uniform_int_distribution<int> count(0, 4);
  const Tolerance tol = kCoordTol;
  const float band = 10.0f * tol.eps;

  int tested = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    OffsetContext ctx;
    const int generals = count(rng);
    for (int g = 0; g < generals; ++g) {
      V3 n{coord(rng), coord(rng), coord(rng)};
      if (length(n) < 1.0f) n = V3{0, 0, 1};
      n = ort(n);
      V3 d{disp(rng), disp(rng), disp(rng)};
      if (dot(n, d) < 0.0f) d = -d;  // keep the transform invertible
      ctx.general.push_back({{n, plane_c(rng)}, d});
    }
    const int locals = count(rng);
    for (int l = 0; l < locals; ++l) {
      LocalOffset off;
      off.pipes = {l % 2 ? "P1" : "P2"};
      off.displacement = {disp(rng), disp(rng), disp(rng)};
      ctx.local.push_back(off);
    }

    const V3 p{coord(rng), coord(rng), coord(rng)};

    // Skip samples whose forward images graze any offset plane.
    bool near_plane = false;
    {
      double q[3] = {p.x, p.y, p.z};
      for (const GeneralOffset& g : ctx.general) {
        const double side = q[0] * g.plane.n.x + q[1] * g.plane.n.y +
                            q[2] * g.plane.n.z - g.plane.c;
        if (std::fabs(side) <= band) {
          near_plane = true;
          break;
        }
        if (side > tol.eps) {
          q[0] += g.displacement.x;
          q[1] += g.displacement.y;
          q[2] += g.displacement.z;
        }
      }
    }
    if (near_plane) continue;

    const V3 there = to_revi(p, ctx, "P1", tol);
    const V3 back = from_revi(there, ctx, "P1", tol);
    CHECK(std::fabs(back.x - p.x) <= tol.eps);
    CHECK(std::fabs(back.y - p.y) <= tol.eps);
    CHECK(std::fabs(back.z - p.z) <= tol.eps);
    ++tested;
  }
  CHECK(tested > 1000);
}

TEST_CASE("segments on one side of every plane translate rigidly") {
  // Integer-valued millimetre coordinates keep every sum exact in single
  // precision, so the endpoint deltas must match bit for bit.
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> coord(-10000, 10000);
  std::uniform_int_distribution<int> disp(-500, 500);
  std::uniform_int_distribution<int> count(1, 4);

  int tested = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    OffsetContext ctx;
    const int generals = count(rng);
    for (int g = 0; g < generals; ++g) {
      const int axis = g % 3;
      V3 n{};
      n[axis] = 1.0f;
      V3 d{Float(disp(rng)), Float(disp(rng)), Float(disp(rng))};
      if (d[axis] < 0.0f) d[axis] = -d[axis];
      ctx.general.push_back({{n, Float(coord(rng))}, d});
    }

    const V3 a{Float(coord(rng)), Float(coord(rng)), Float(coord(rng))};
    const V3 b{Float(coord(rng)), Float(coord(rng)), Float(coord(rng))};

    // Keep only segments with both endpoints strictly on the same side of
    // every plane during sequential application.
    bool same_side = true;
    {
      V3 qa = a, qb = b;
      for (const GeneralOffset& g : ctx.general) {
        const bool above_a = dot(g.plane.n, qa) > g.plane.c + kCoordTol.eps;
        const bool above_b = dot(g.plane.n, qb) > g.plane.c + kCoordTol.eps;
        if (above_a != above_b) {
          same_side = false;
          break;
        }
        if (above_a) {
          qa = qa + g.displacement;
          qb = qb + g.displacement;
        }
      }
    }
    if (!same_side) continue;

    const V3 da = to_revi(a, ctx);
    const V3 db = to_revi(b, ctx);
    CHECK(db - da == b - a);
    CHECK(distance(da, db) == distance(a, b));
    ++tested;
  }
  CHECK(tested > 500);
}

TEST_CASE("straddling segments stretch by the displacement") {
  const OffsetContext ctx = lift_ctx(100.0f, 50.0f);
  const V3 a{0, 0, 0};
  const V3 b{0, 0, 160};
  CHECK(to_revi(a, ctx) == a);
  CHECK(to_revi(b, ctx) == V3{0, 0, 210});
  // The visible length no longer matches the true one.
  CHECK(distance(to_revi(a, ctx), to_revi(b, ctx)) == 210.0f);
  CHECK(distance(a, b) == 160.0f);
}

TEST_CASE("revi_to_paper rescales and anchors") {
  const ProjectionOp take_xy{{0, 0}, M23{{1, 0, 0, 0, 1, 0}}};
  CHECK(revi_to_paper(V3{100, 200, -77}, take_xy, V2{0, 0}, 50.0f) == V2{2, 4});
  CHECK(revi_to_paper(V3{}, take_xy, V2{30, 40}, 2.0f) == V2{30, 40});

  const ProjectionOp iso = default_isometric(1.0f);
  const V2 p = revi_to_paper(V3{1, 1, 1}, iso, V2{0, 0}, 1.0f);
  CHECK(std::fabs(p.x) <= 1e-5f);
  CHECK(std::fabs(p.y) <= 1e-5f);
}

TEST_CASE("revi_to_paper rejects non-positive denominators") {
  const ProjectionOp iso = default_isometric(1.0f);
  expect_error(ErrorCode::kInvalidScale,
               [&] { revi_to_paper(V3{1, 2, 3}, iso, V2{}, 0.0f); });
}
