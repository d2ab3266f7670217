#pragma once

#include <array>
#include <span>
#include <string>

#include "inellipse/geometry.hpp"

namespace inellipse {

inline constexpr double kDefaultEps = 1e-9;

// Strictly convex quadrilateral with counterclockwise vertices.
class ConvexQuad {
 public:
  const std::array<Point2, 4>& vertices() const { return vertices_; }
  Point2 vertex(int i) const { return vertices_[static_cast<std::size_t>(((i % 4) + 4) % 4)]; }
  // Max pairwise vertex distance.
  double diameter() const;

  friend ConvexQuad validate_convex_quad(Point2, Point2, Point2, Point2, double);

 private:
  explicit ConvexQuad(const std::array<Point2, 4>& ccw) : vertices_(ccw) {}
  std::array<Point2, 4> vertices_;
};

/// Validates four vertices given in cyclic order (either orientation) and returns the
/// quad re-oriented counterclockwise. `eps` is relative to the quad's diameter.
///
/// Throws Error with DuplicateVertex, CollinearVertices, SelfIntersectingOrder (the four
/// points are in convex position but listed out of cyclic order) or NonConvex.
ConvexQuad validate_convex_quad(Point2 p1, Point2 p2, Point2 p3, Point2 p4,
                                double eps = kDefaultEps);
ConvexQuad validate_convex_quad(std::span<const Point2, 4> points, double eps = kDefaultEps);

// Line through `point` with direction `direction`.
struct Line2 {
  Point2 point;
  Point2 direction;
};

struct DiagonalData {
  Line2 d1;  // v0 v2
  Line2 d2;  // v1 v3
  Point2 intersection;
  Point2 mid1;  // midpoint of v1 v3
  Point2 mid2;  // midpoint of v0 v2
};

DiagonalData diagonal_data(const ConvexQuad& q);

enum class RegionKind {
  Exterior,
  Vertex,
  BoundarySide,
  InteriorDiagonalIntersection,
  InteriorOnDiagonal,
  InteriorGeneric,
};

struct PointRegion {
  RegionKind kind = RegionKind::Exterior;
  // Vertex index, side index (side i runs from vertex i to vertex i+1), or diagonal
  // (0 for v0v2, 1 for v1v3). -1 when not applicable.
  int index = -1;
};

std::string region_name(RegionKind kind);

/// Classifies p against q using distances scaled by the quad diameter.
/// Precedence: Vertex, Exterior, BoundarySide, InteriorDiagonalIntersection,
/// InteriorOnDiagonal, InteriorGeneric.
PointRegion locate_point(const ConvexQuad& q, Point2 p, double eps = kDefaultEps);

}  // namespace inellipse
