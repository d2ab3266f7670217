#include "inellipse/quad.hpp"

#include <algorithm>
#include <cmath>

#include "inellipse/error.hpp"

namespace inellipse {

namespace {

double max_pairwise_distance(std::span<const Point2, 4> p) {
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) d = std::max(d, distance(p[i], p[j]));
  }
  return d;
}

// Strictly inside triangle abc (either orientation).
bool inside_triangle(Point2 p, Point2 a, Point2 b, Point2 c) {
  const double d1 = cross(b - a, p - a);
  const double d2 = cross(c - b, p - b);
  const double d3 = cross(a - c, p - c);
  return (d1 > 0 && d2 > 0 && d3 > 0) || (d1 < 0 && d2 < 0 && d3 < 0);
}

double distance_to_line(Point2 p, const Line2& line) {
  return std::abs(cross(line.direction, p - line.point)) / norm(line.direction);
}

}  // namespace

double ConvexQuad::diameter() const { return max_pairwise_distance(vertices_); }

ConvexQuad validate_convex_quad(Point2 p1, Point2 p2, Point2 p3, Point2 p4, double eps) {
  std::array<Point2, 4> p{p1, p2, p3, p4};
  if (!std::all_of(p.begin(), p.end(), [](Point2 v) { return is_finite(v); })) {
    throw Error(ErrorCode::InvalidArgument, "quad vertices must be finite");
  }
  if (!(eps > 0.0)) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  const double diam = max_pairwise_distance(p);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (distance(p[i], p[j]) <= eps * diam) {
        throw Error(ErrorCode::DuplicateVertex,
                    "vertices " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                        " coincide");
      }
    }
  }

  std::array<double, 4> turn{};
  for (std::size_t i = 0; i < 4; ++i) {
    const Point2 a = p[i];
    const Point2 b = p[(i + 1) % 4];
    const Point2 c = p[(i + 2) % 4];
    turn[i] = cross(b - a, c - b);
    if (std::abs(turn[i]) <= eps * diam * diam) {
      throw Error(ErrorCode::CollinearVertices,
                  "vertices " + std::to_string(i + 1) + ", " + std::to_string((i + 1) % 4 + 1) +
                      ", " + std::to_string((i + 2) % 4 + 1) + " are collinear");
    }
  }

  const bool all_left = std::all_of(turn.begin(), turn.end(), [](double v) { return v > 0; });
  const bool all_right = std::all_of(turn.begin(), turn.end(), [](double v) { return v < 0; });
  if (all_left) return ConvexQuad(p);
  if (all_right) return ConvexQuad({p[0], p[3], p[2], p[1]});

  for (std::size_t i = 0; i < 4; ++i) {
    if (inside_triangle(p[i], p[(i + 1) % 4], p[(i + 2) % 4], p[(i + 3) % 4])) {
      throw Error(ErrorCode::NonConvex,
                  "vertex " + std::to_string(i + 1) + " lies inside the triangle of the others");
    }
  }
  throw Error(ErrorCode::SelfIntersectingOrder,
              "vertices are in convex position but not listed in cyclic order");
}

ConvexQuad validate_convex_quad(std::span<const Point2, 4> points, double eps) {
  return validate_convex_quad(points[0], points[1], points[2], points[3], eps);
}

DiagonalData diagonal_data(const ConvexQuad& q) {
  const auto& v = q.vertices();
  DiagonalData out;
  out.d1 = {v[0], v[2] - v[0]};
  out.d2 = {v[1], v[3] - v[1]};
  const double along = cross(v[1] - v[0], out.d2.direction) / cross(out.d1.direction, out.d2.direction);
  out.intersection = v[0] + along * out.d1.direction;
  out.mid1 = midpoint(v[1], v[3]);
  out.mid2 = midpoint(v[0], v[2]);
  return out;
}

std::string region_name(RegionKind kind) {
  switch (kind) {
    case RegionKind::Exterior: return "exterior";
    case RegionKind::Vertex: return "vertex";
    case RegionKind::BoundarySide: return "boundary_side";
    case RegionKind::InteriorDiagonalIntersection: return "interior_diagonal_intersection";
    case RegionKind::InteriorOnDiagonal: return "interior_on_diagonal";
    case RegionKind::InteriorGeneric: return "interior_generic";
  }
  return "unknown";
}

PointRegion locate_point(const ConvexQuad& q, Point2 p, double eps) {
  if (!(eps > 0.0)) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  if (!is_finite(p)) throw Error(ErrorCode::InvalidArgument, "query point must be finite");
  const auto& v = q.vertices();
  const double tol = eps * q.diameter();

  for (int i = 0; i < 4; ++i) {
    if (distance(p, v[static_cast<std::size_t>(i)]) <= tol) return {RegionKind::Vertex, i};
  }

  std::array<double, 4> side_distance{};
  for (std::size_t i = 0; i < 4; ++i) {
    const Point2 edge = v[(i + 1) % 4] - v[i];
    side_distance[i] = cross(edge, p - v[i]) / norm(edge);
  }
  if (*std::min_element(side_distance.begin(), side_distance.end()) < -tol) {
    return {RegionKind::Exterior, -1};
  }
  for (int i = 0; i < 4; ++i) {
    if (std::abs(side_distance[static_cast<std::size_t>(i)]) <= tol) {
      return {RegionKind::BoundarySide, i};
    }
  }

  const DiagonalData diag = diagonal_data(q);
  const bool on_d1 = distance_to_line(p, diag.d1) <= tol;
  const bool on_d2 = distance_to_line(p, diag.d2) <= tol;
  if (on_d1 && on_d2) return {RegionKind::InteriorDiagonalIntersection, -1};
  if (on_d1) return {RegionKind::InteriorOnDiagonal, 0};
  if (on_d2) return {RegionKind::InteriorOnDiagonal, 1};
  return {RegionKind::InteriorGeneric, -1};
}

}  // namespace inellipse
