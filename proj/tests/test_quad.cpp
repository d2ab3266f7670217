#include <gtest/gtest.h>

#include "inellipse/error.hpp"
#include "inellipse/quad.hpp"
#include "support/generators.hpp"

using namespace inellipse;
using namespace inellipse::testing;

namespace {

ErrorCode validation_error(Point2 a, Point2 b, Point2 c, Point2 d) {
  try {
    validate_convex_quad(a, b, c, d);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a validation error";
  return ErrorCode::InternalInconsistency;
}

const ConvexQuad kUnitSquare = validate_convex_quad({0, 0}, {1, 0}, {1, 1}, {0, 1});

}  // namespace

TEST(Quad, AcceptsConvexQuads) {
  EXPECT_EQ(kUnitSquare.vertices()[2].x, 1.0);
  const ConvexQuad q = validate_convex_quad({-1, 2}, {3, 4}, {9, 2}, {3, -1});
  // Clockwise input comes back counterclockwise.
  double area2 = 0.0;
  for (int i = 0; i < 4; ++i) area2 += cross(q.vertex(i), q.vertex(i + 1));
  EXPECT_GT(area2, 0.0);
}

TEST(Quad, RejectsInvalidInput) {
  EXPECT_EQ(validation_error({0, 0}, {2, 0}, {1, 0.5}, {0, 2}), ErrorCode::NonConvex);
  EXPECT_EQ(validation_error({0, 0}, {1, 0}, {1, 0}, {0, 1}), ErrorCode::DuplicateVertex);
  EXPECT_EQ(validation_error({0, 0}, {1, 0}, {2, 0}, {0, 1}), ErrorCode::CollinearVertices);
  EXPECT_EQ(validation_error({0, 0}, {1, 1}, {1, 0}, {0, 1}), ErrorCode::SelfIntersectingOrder);
  EXPECT_EQ(validation_error({0, 0}, {NAN, 0}, {1, 1}, {0, 1}), ErrorCode::InvalidArgument);
}

TEST(Quad, DiagonalData) {
  const ConvexQuad q = validate_convex_quad({0, 0}, {1, 0}, {4, 2}, {0, 1});
  const DiagonalData d = diagonal_data(q);
  EXPECT_NEAR(d.intersection.x, 2.0 / 3, 1e-15);
  EXPECT_NEAR(d.intersection.y, 1.0 / 3, 1e-15);
  EXPECT_NEAR(d.mid1.x, 0.5, 1e-15);
  EXPECT_NEAR(d.mid1.y, 0.5, 1e-15);
  EXPECT_NEAR(d.mid2.x, 2.0, 1e-15);
  EXPECT_NEAR(d.mid2.y, 1.0, 1e-15);

  const DiagonalData s = diagonal_data(kUnitSquare);
  EXPECT_EQ(s.mid1, s.mid2);
  EXPECT_NEAR(s.mid1.x, 0.5, 1e-15);
}

TEST(Quad, DiagonalIntersectionIgnoresCyclicRelabeling) {
  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    const ConvexQuad q = image_quad(random_general(rng), random_affine(rng));
    const auto& v = q.vertices();
    const ConvexQuad r = validate_convex_quad(v[1], v[2], v[3], v[0]);
    EXPECT_LT(distance(diagonal_data(q).intersection, diagonal_data(r).intersection),
              1e-12 * q.diameter());
  }
}

TEST(Quad, LocateKnownPoints) {
  const ConvexQuad q2 = validate_convex_quad({0, 0}, {1, 0}, {4, 2}, {0, 1});
  EXPECT_EQ(locate_point(q2, {0.5, 0.25}).kind, RegionKind::InteriorOnDiagonal);
  EXPECT_EQ(locate_point(q2, {0.5, 0.25}).index, 0);
  EXPECT_EQ(locate_point(q2, {2.0 / 3, 1.0 / 3}).kind, RegionKind::InteriorDiagonalIntersection);

  const ConvexQuad q1 = validate_convex_quad({0, 0}, {1, 0}, {0.5, 0.75}, {0, 1});
  EXPECT_EQ(locate_point(q1, {1.0 / 3, 0.75}).kind, RegionKind::InteriorGeneric);

  for (int i = 0; i < 4; ++i) {
    const PointRegion r = locate_point(q1, q1.vertex(i));
    EXPECT_EQ(r.kind, RegionKind::Vertex);
    EXPECT_EQ(r.index, i);
  }
  EXPECT_EQ(locate_point(q1, {2, 2}).kind, RegionKind::Exterior);
  const PointRegion side = locate_point(kUnitSquare, {0.5, 0.0});
  EXPECT_EQ(side.kind, RegionKind::BoundarySide);
  EXPECT_EQ(side.index, 0);
  EXPECT_EQ(locate_point(kUnitSquare, {1.0, 0.3}).index, 1);
}

TEST(Quad, LocateConstructedPoints) {
  Rng rng(22);
  for (int i = 0; i < 200; ++i) {
    const CanonicalShape shape = random_shape(rng, static_cast<ShapeKind>(i % 3));
    const AffineMap2 t = random_affine(rng);
    const ConvexQuad q = image_quad(shape, t);
    EXPECT_EQ(locate_point(q, t(generic_interior_point(rng, shape))).kind, RegionKind::InteriorGeneric);
    EXPECT_EQ(locate_point(q, t(on_diagonal_point(rng, shape, i % 2))).kind,
              RegionKind::InteriorOnDiagonal);
    EXPECT_EQ(locate_point(q, t(canonical_intersection(shape))).kind,
              RegionKind::InteriorDiagonalIntersection);
    EXPECT_EQ(locate_point(q, t(boundary_point(rng, shape, i % 4))).kind, RegionKind::BoundarySide);
    const Point2 c = t(canonical_intersection(shape));
    const Point2 far = c + 3.0 * (q.vertex(0) - c);
    EXPECT_EQ(locate_point(q, far).kind, RegionKind::Exterior);
  }
}
