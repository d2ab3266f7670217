#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "inellipse/geometry.hpp"
#include "inellipse/quad.hpp"
#include "inellipse/shape_kind.hpp"

namespace inellipse {

enum class QuadClass { GeneralPosition, Trapezoid, Parallelogram };

std::string_view quad_class_name(QuadClass c);

struct GeneralShape {
  double s = 0.0;
  double t = 0.0;
};

struct TrapezoidShape {
  double t = 0.0;
};

struct SquareShape {};

using CanonicalShape = std::variant<GeneralShape, TrapezoidShape, SquareShape>;

ShapeKind shape_kind(const CanonicalShape& shape);

// Canonical vertices V0..V3 in counterclockwise order:
// (0,0), (1,0), (s,t) | (1,t) | (1,1), (0,1).
std::array<Point2, 4> canonical_vertices(const CanonicalShape& shape);

// Side endpoints for S1..S4: S1 = V0V1, S2 = V0V3, S3 = V1V2, S4 = V3V2.
std::array<std::array<Point2, 2>, 4> canonical_sides(const CanonicalShape& shape);

struct CanonicalForm {
  CanonicalShape shape;
  AffineMap2 map;      // original -> canonical
  AffineMap2 inverse;  // canonical -> original
  // Index into ConvexQuad::vertices() of the vertex sent to (0,0); the others follow
  // counterclockwise.
  int start = 0;

  ShapeKind kind() const { return shape_kind(shape); }
};

QuadClass classify(const ConvexQuad& q, double eps = kDefaultEps);

/// Affine normalization of q. Labeling starts from the lexicographically smallest vertex
/// and rotates only as needed; `start` forces the first labeling tried (used to check that
/// answers do not depend on the labeling). Throws Error(ClassificationFailed) when no
/// admissible labeling exists under `eps`.
CanonicalForm canonical_map(const ConvexQuad& q, double eps = kDefaultEps,
                            std::optional<int> start = std::nullopt);

// Starting vertices that produce a valid canonical labeling for q.
std::vector<int> admissible_starts(const ConvexQuad& q, double eps = kDefaultEps);

}  // namespace inellipse
