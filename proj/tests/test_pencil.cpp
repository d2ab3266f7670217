#include <gtest/gtest.h>

#include <cmath>

#include "inellipse/error.hpp"
#include "inellipse/oracle.hpp"
#include "inellipse/pencil.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace inellipse;
using namespace inellipse::testing;

namespace {

const double kSqrt3 = std::sqrt(3.0);

Conic member(const CanonicalShape& shape, double value) {
  return inscribed_conic(shape, {shape_kind(shape), value});
}

Conic family_conic(const CanonicalShape& shape, double value) {
  if (const auto* g = std::get_if<GeneralShape>(&shape))
    return conic_from_samples([&](double x, double y) { return general_family_centered(g->s, g->t, value, x, y); });
  if (const auto* tr = std::get_if<TrapezoidShape>(&shape))
    return conic_from_samples([&](double x, double y) { return trapezoid_family(tr->t, value, x, y); });
  return conic_from_samples([&](double x, double y) { return square_family(value, x, y); });
}

}  // namespace

TEST(Pencil, IntervalEndpoints) {
  const ParamInterval a = param_interval(GeneralShape{4, 2});
  EXPECT_DOUBLE_EQ(a.lo, 0.5);
  EXPECT_DOUBLE_EQ(a.hi, 2.0);
  const ParamInterval b = param_interval(GeneralShape{0.5, 0.75});
  EXPECT_DOUBLE_EQ(b.lo, 0.25);
  EXPECT_DOUBLE_EQ(b.hi, 0.5);
  const ParamInterval c = param_interval(SquareShape{});
  EXPECT_DOUBLE_EQ(c.lo, 0.0);
  EXPECT_DOUBLE_EQ(c.hi, 1.0);
  const ParamInterval d = param_interval(TrapezoidShape{1.5});
  EXPECT_DOUBLE_EQ(d.lo, 0.5);
  EXPECT_DOUBLE_EQ(d.hi, 0.75);
}

TEST(Pencil, NewtonHeight) {
  const GeneralShape g{4, 2};
  EXPECT_DOUBLE_EQ(newton_height(g, 0.5), 0.5);
  EXPECT_DOUBLE_EQ(newton_height(g, 2.0), 1.0);
  EXPECT_NEAR(newton_height(g, 10.0 / 19), 29.0 / 57, 1e-15);
}

TEST(Pencil, InscribedConicKnownMembers) {
  EXPECT_LT(conic_distance(member(GeneralShape{4, 2}, 10.0 / 19),
                           Conic{63916, 68400, 55176, -123424, -127680, 59584}),
            1e-12);
  EXPECT_LT(conic_distance(member(TrapezoidShape{1.5}, 0.51),
                           Conic{2601, 2500, 2250, -4896, -4800, 2304}),
            1e-12);
  EXPECT_LT(conic_distance(member(SquareShape{}, 0.5), Conic{1, 1, 0, -1, -1, 0.25}), 1e-15);

  const Conic e1{29673 - 4104 * kSqrt3, 23632 - 7104 * kSqrt3, 0.5 * (26808 - 25488 * kSqrt3),
                 18864 * kSqrt3 - 38340, 19104 * kSqrt3 - 37104, 17316 - 9792 * kSqrt3};
  EXPECT_LT(conic_distance(member(GeneralShape{0.5, 0.75}, 37.0 / 97 - 6.0 / 97 * kSqrt3), e1), 1e-9);
}

TEST(Pencil, InscribedConicRejectsBadParams) {
  try {
    member(GeneralShape{4, 2}, 2.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParamOutOfInterval);
  }
  EXPECT_THROW(member(SquareShape{}, 0.0), Error);
  EXPECT_THROW(inscribed_conic(SquareShape{}, {ShapeKind::General, 0.5}), Error);
}

TEST(Pencil, TangentPointKnownValues) {
  const TangentPoints sq = tangent_points(SquareShape{}, {ShapeKind::Square, 0.5});
  const Point2 mids[4] = {{0.5, 0}, {0, 0.5}, {1, 0.5}, {0.5, 1}};
  for (int i = 0; i < 4; ++i) EXPECT_LT(distance(sq.zeta[static_cast<std::size_t>(i)], mids[i]), 1e-12);

  const CanonicalShape g = GeneralShape{4, 2};
  const TangentPoints tg = tangent_points(g, {ShapeKind::General, 10.0 / 19});
  EXPECT_NEAR(tg.zeta[0].x, 28.0 / 29, 1e-14);
  EXPECT_EQ(tg.zeta[0].y, 0.0);
  for (const Point2& z : tg.zeta) EXPECT_LT(std::abs(evaluate(member(g, 10.0 / 19), z)), 1e-12);

  const CanonicalShape tr = TrapezoidShape{1.5};
  const TangentPoints tt = tangent_points(tr, {ShapeKind::Trapezoid, 0.51});
  EXPECT_EQ(tt.zeta[1].x, 0.0);
  EXPECT_NEAR(tt.zeta[1].y, 24.0 / 25, 1e-14);
  for (const Point2& z : tt.zeta) EXPECT_LT(std::abs(evaluate(member(tr, 0.51), z)), 1e-12);
}

TEST(Pencil, ClosedCoefficientsMatchPrintedFamily) {
  Rng rng(41);
  for (int i = 0; i < 300; ++i) {
    const CanonicalShape shape = random_shape(rng, static_cast<ShapeKind>(i % 3));
    const ParamInterval iv = param_interval(shape);
    const double v = iv.lo + uniform(rng, 0.01, 0.99) * iv.width();
    EXPECT_LT(conic_distance(member(shape, v), family_conic(shape, v)), 1e-10);
  }
}

TEST(Pencil, MembersAreEllipsesTangentToEachSide) {
  Rng rng(42);
  for (int i = 0; i < 30; ++i) {
    const CanonicalShape shape = random_shape(rng, static_cast<ShapeKind>(i % 3));
    const ParamInterval iv = param_interval(shape);
    const auto sides = canonical_sides(shape);
    for (std::size_t j = 0; j < 1000; ++j) {
      const double v = iv.node(j, 1000);
      const Conic k = member(shape, v);
      const EllipseDiscriminants d = ellipse_discriminants(k);
      ASSERT_GT(d.quadratic, 0.0);
      ASSERT_GT(d.nontrivial, 0.0);
      if (const auto* g = std::get_if<GeneralShape>(&shape)) {
        ASSERT_GT(g->s + 2.0 * v * (g->t - 1.0), 0.0);
        const Point2 c = center(k);
        EXPECT_NEAR(c.x, v, 1e-9);
        EXPECT_NEAR(c.y, newton_height(*g, v), 1e-9);
      }
      if (j % 50 != 0) continue;
      const TangentPoints tp = tangent_points(shape, {shape_kind(shape), v});
      for (std::size_t s = 0; s < 4; ++s) {
        const Point2 a = sides[s][0], b = sides[s][1];
        const Point2 z = tp.zeta[s];
        const double u = dot(z - a, b - a) / dot(b - a, b - a);
        EXPECT_GT(u, 0.0);
        EXPECT_LT(u, 1.0);
        EXPECT_LT(std::abs(cross(b - a, z - a)), 1e-12);
        EXPECT_LT(std::abs(evaluate(k, z)), 1e-9);
        // Gradient is normal to the side at the contact point.
        const Point2 grad = gradient(k, z);
        EXPECT_LT(std::abs(dot(grad, b - a)), 1e-7 * norm(grad) * norm(b - a) + 1e-12);
      }
    }
  }
}

TEST(Pencil, SegmentContactOnIncircle) {
  const SegmentContact c = segment_contact(member(SquareShape{}, 0.5), {0, 0}, {1, 0});
  EXPECT_NEAR(c.u, 0.5, 1e-15);
  EXPECT_LT(std::abs(c.discriminant), 1e-15 * c.scale);
}
