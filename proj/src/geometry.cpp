#include "inellipse/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "inellipse/error.hpp"

namespace inellipse {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::DuplicateVertex: return "duplicate_vertex";
    case ErrorCode::CollinearVertices: return "collinear_vertices";
    case ErrorCode::NonConvex: return "non_convex";
    case ErrorCode::SelfIntersectingOrder: return "self_intersecting_order";
    case ErrorCode::SingularMap: return "singular_map";
    case ErrorCode::NotAnEllipse: return "not_an_ellipse";
    case ErrorCode::ClassificationFailed: return "classification_failed";
    case ErrorCode::ParamOutOfInterval: return "param_out_of_interval";
    case ErrorCode::PointOutsideQuad: return "point_outside_quad";
    case ErrorCode::ExteriorPoint: return "exterior_point";
    case ErrorCode::VertexPoint: return "vertex_point";
    case ErrorCode::InternalInconsistency: return "internal_inconsistency";
  }
  return "unknown";
}

AffineMap2::AffineMap2(const std::array<double, 4>& linear, Point2 offset)
    : linear_(linear), offset_(offset) {
  const bool finite = std::all_of(linear.begin(), linear.end(),
                                  [](double v) { return std::isfinite(v); }) &&
                      is_finite(offset);
  const double scale = std::max({std::abs(linear[0]), std::abs(linear[1]),
                                 std::abs(linear[2]), std::abs(linear[3])});
  if (!finite || scale == 0.0 || std::abs(determinant()) <= 1e-300 ||
      std::abs(determinant()) <= 1e-15 * scale * scale) {
    throw Error(ErrorCode::SingularMap, "affine map has a singular linear part");
  }
}

AffineMap2 AffineMap2::from_frame(Point2 origin, Point2 e1, Point2 e2) {
  return AffineMap2{{e1.x, e2.x, e1.y, e2.y}, origin};
}

double AffineMap2::condition_number() const {
  // Singular values of a 2x2 matrix from its Frobenius norm and determinant.
  const auto& m = linear_;
  const double fro2 = m[0] * m[0] + m[1] * m[1] + m[2] * m[2] + m[3] * m[3];
  const double det = std::abs(determinant());
  const double disc = std::sqrt(std::max(0.0, fro2 * fro2 - 4.0 * det * det));
  const double smax2 = 0.5 * (fro2 + disc);
  const double smin2 = det * det / smax2;
  return std::sqrt(smax2 / smin2);
}

AffineMap2 AffineMap2::inverse() const {
  const double det = determinant();
  const std::array<double, 4> inv{linear_[3] / det, -linear_[1] / det, -linear_[2] / det,
                                  linear_[0] / det};
  const Point2 off{-(inv[0] * offset_.x + inv[1] * offset_.y),
                   -(inv[2] * offset_.x + inv[3] * offset_.y)};
  return AffineMap2{inv, off};
}

AffineMap2 AffineMap2::after(const AffineMap2& other) const {
  const auto& m = linear_;
  const auto& n = other.linear_;
  const std::array<double, 4> lin{m[0] * n[0] + m[1] * n[2], m[0] * n[1] + m[1] * n[3],
                                  m[2] * n[0] + m[3] * n[2], m[2] * n[1] + m[3] * n[3]};
  return AffineMap2{lin, (*this)(other.offset_)};
}

double max_abs_difference(const AffineMap2& f, const AffineMap2& g) {
  double worst = std::max(std::abs(f.offset().x - g.offset().x),
                          std::abs(f.offset().y - g.offset().y));
  for (std::size_t i = 0; i < 4; ++i) {
    worst = std::max(worst, std::abs(f.linear()[i] - g.linear()[i]));
  }
  return worst;
}

}  // namespace inellipse
