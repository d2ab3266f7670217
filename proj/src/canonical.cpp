#include "inellipse/canonical.hpp"

#include <algorithm>
#include <cmath>

#include "inellipse/error.hpp"

namespace inellipse {

namespace {

bool nearly_parallel(Point2 u, Point2 w, double eps) {
  return std::abs(cross(u, w)) <= eps * norm(u) * norm(w);
}

int lexicographic_min_index(const ConvexQuad& q) {
  const auto& v = q.vertices();
  const auto it = std::min_element(v.begin(), v.end(), [](Point2 p, Point2 r) {
    return p.x < r.x || (p.x == r.x && p.y < r.y);
  });
  return static_cast<int>(it - v.begin());
}

std::optional<CanonicalForm> try_labeling(const ConvexQuad& q, QuadClass cls, int start,
                                          double eps) {
  const Point2 va = q.vertex(start);
  const Point2 vb = q.vertex(start + 1);
  const Point2 vc = q.vertex(start + 2);
  const Point2 vd = q.vertex(start + 3);

  CanonicalForm cf;
  cf.start = ((start % 4) + 4) % 4;
  cf.inverse = AffineMap2::from_frame(va, vb - va, vd - va);
  cf.map = cf.inverse.inverse();
  const Point2 image = cf.map(vc);

  switch (cls) {
    case QuadClass::GeneralPosition: {
      const double s = image.x;
      const double t = image.y;
      if (!(s > eps && t > eps && s + t > 1.0 + eps)) return std::nullopt;
      if (std::abs(s - 1.0) <= eps || std::abs(t - 1.0) <= eps) return std::nullopt;
      cf.shape = GeneralShape{s, t};
      return cf;
    }
    case QuadClass::Trapezoid: {
      // The parallel pair must be V3V0 and V1V2 so that it lands on x = 0 and x = 1.
      if (!nearly_parallel(vd - va, vc - vb, eps)) return std::nullopt;
      const double t = image.y;
      if (!(t > eps) || std::abs(t - 1.0) <= eps) return std::nullopt;
      cf.shape = TrapezoidShape{t};
      return cf;
    }
    case QuadClass::Parallelogram:
      cf.shape = SquareShape{};
      return cf;
  }
  return std::nullopt;
}

}  // namespace

std::string_view quad_class_name(QuadClass c) {
  switch (c) {
    case QuadClass::GeneralPosition: return "general_position";
    case QuadClass::Trapezoid: return "trapezoid";
    case QuadClass::Parallelogram: return "parallelogram";
  }
  return "unknown";
}

ShapeKind shape_kind(const CanonicalShape& shape) {
  if (std::holds_alternative<GeneralShape>(shape)) return ShapeKind::General;
  if (std::holds_alternative<TrapezoidShape>(shape)) return ShapeKind::Trapezoid;
  return ShapeKind::Square;
}

std::array<Point2, 4> canonical_vertices(const CanonicalShape& shape) {
  Point2 far{1.0, 1.0};
  if (const auto* g = std::get_if<GeneralShape>(&shape)) far = {g->s, g->t};
  if (const auto* z = std::get_if<TrapezoidShape>(&shape)) far = {1.0, z->t};
  return {Point2{0.0, 0.0}, Point2{1.0, 0.0}, far, Point2{0.0, 1.0}};
}

std::array<std::array<Point2, 2>, 4> canonical_sides(const CanonicalShape& shape) {
  const auto v = canonical_vertices(shape);
  return {{{v[0], v[1]}, {v[0], v[3]}, {v[1], v[2]}, {v[3], v[2]}}};
}

QuadClass classify(const ConvexQuad& q, double eps) {
  const auto& v = q.vertices();
  int parallel_pairs = 0;
  if (nearly_parallel(v[1] - v[0], v[3] - v[2], eps)) ++parallel_pairs;
  if (nearly_parallel(v[2] - v[1], v[0] - v[3], eps)) ++parallel_pairs;
  switch (parallel_pairs) {
    case 0: return QuadClass::GeneralPosition;
    case 1: return QuadClass::Trapezoid;
    default: return QuadClass::Parallelogram;
  }
}

CanonicalForm canonical_map(const ConvexQuad& q, double eps, std::optional<int> start) {
  const QuadClass cls = classify(q, eps);
  const int first = start.value_or(lexicographic_min_index(q));
  for (int rotation = 0; rotation < 4; ++rotation) {
    if (auto cf = try_labeling(q, cls, first + rotation, eps)) return *cf;
  }
  throw Error(ErrorCode::ClassificationFailed,
              std::string("no canonical labeling found for a ") +
                  std::string(quad_class_name(cls)) + " quadrilateral");
}

std::vector<int> admissible_starts(const ConvexQuad& q, double eps) {
  const QuadClass cls = classify(q, eps);
  std::vector<int> out;
  for (int k = 0; k < 4; ++k) {
    if (try_labeling(q, cls, k, eps)) out.push_back(k);
  }
  return out;
}

}  // namespace inellipse
