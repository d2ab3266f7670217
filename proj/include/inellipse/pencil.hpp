#pragma once

#include <array>

#include "inellipse/canonical.hpp"
#include "inellipse/conic.hpp"

namespace inellipse {

// Open interval (lo, hi) of admissible pencil parameters.
struct ParamInterval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  bool contains(double value, double margin = 0.0) const {
    return value > lo + margin && value < hi - margin;
  }
  // `n` points equally spaced strictly inside: lo + (i+1)·width/(n+1).
  double node(std::size_t i, std::size_t n) const {
    return lo + static_cast<double>(i + 1) * (width() / static_cast<double>(n + 1));
  }
};

// Member of a pencil: h for General, k for Trapezoid, v for Square.
struct PencilParam {
  ShapeKind kind = ShapeKind::General;
  double value = 0.0;
};

// Contact points, one per side S1..S4 in canonical_sides() order.
struct TangentPoints {
  std::array<Point2, 4> zeta;
};

// Absolute tolerance applied to interval membership.
inline constexpr double kParamMembershipTol = 1e-12;

ParamInterval param_interval(const CanonicalShape& shape);
inline ParamInterval param_interval(const CanonicalForm& cf) { return param_interval(cf.shape); }

// Height of the line through the diagonal midpoints above abscissa h.
double newton_height(const GeneralShape& shape, double h);

// Center of the pencil member with parameter `value`.
Point2 pencil_center(const CanonicalShape& shape, double value);

// Throws Error(ParamOutOfInterval) or Error(InvalidArgument) on a shape-tag mismatch.
Conic inscribed_conic(const CanonicalShape& shape, PencilParam param);
inline Conic inscribed_conic(const CanonicalForm& cf, PencilParam param) {
  return inscribed_conic(cf.shape, param);
}

TangentPoints tangent_points(const CanonicalShape& shape, PencilParam param);
inline TangentPoints tangent_points(const CanonicalForm& cf, PencilParam param) {
  return tangent_points(cf.shape, param);
}

// Double root of `conic` restricted to segment [p, q], returned as the point and the
// segment parameter u in p + u·(q - p).
struct SegmentContact {
  Point2 point;
  double u = 0.0;
  double discriminant = 0.0;
  double scale = 0.0;  // beta² + |4·alpha·gamma|, summed over anchors p and q
};
SegmentContact segment_contact(const Conic& conic, Point2 p, Point2 q);

}  // namespace inellipse
