#pragma once

#include <array>

#include "inellipse/geometry.hpp"

namespace inellipse {

/// Quadratic curve a·x² + b·y² + 2c·xy + d·x + e·y + f = 0.
///
/// `c` is half the xy coefficient. A printed equation "... + 24xy + ..." has c = 12.
/// Conics returned by this library are normalized: the largest absolute coefficient
/// is 1 and the first nonzero coefficient in (a, b, c, d, e, f) order is positive.
struct Conic {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double e = 0.0;
  double f = 0.0;

  std::array<double, 6> coefficients() const { return {a, b, c, d, e, f}; }
  static Conic from_coefficients(const std::array<double, 6>& k) {
    return {k[0], k[1], k[2], k[3], k[4], k[5]};
  }

  // Throws Error(InvalidArgument) when all coefficients are zero or any is non-finite.
  Conic normalized() const;
  double max_abs_coefficient() const;

  friend bool operator==(const Conic&, const Conic&) = default;
};

struct EllipseParams {
  Point2 center;
  double semi_major = 0.0;
  double semi_minor = 0.0;
  double rotation = 0.0;  // major-axis angle in (-pi/2, pi/2]; 0 for circles

  Point2 point_at(double angle) const;
};

// Coefficients of q(u) = alpha·u² + beta·u + gamma, the conic restricted to origin + u·direction.
struct LineRestriction {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

inline constexpr double kConicTolerance = 1e-9;

double evaluate(const Conic& conic, Point2 p);

// Sum of absolute term magnitudes at p; the natural scale for |evaluate(conic, p)|.
double evaluation_scale(const Conic& conic, Point2 p);

// Gradient of the conic polynomial at p.
Point2 gradient(const Conic& conic, Point2 p);

bool is_nontrivial_ellipse(const Conic& conic);

// Throws Error(NotAnEllipse) when ab - c² vanishes.
Point2 center(const Conic& conic);

// Normalized conic K' with K'(p) = 0 iff conic(map(p)) = 0.
Conic pullback(const Conic& conic, const AffineMap2& map);

// Throws Error(NotAnEllipse) unless is_nontrivial_ellipse(conic).
EllipseParams geometric_params(const Conic& conic);

LineRestriction restrict_to_line(const Conic& conic, Point2 origin, Point2 direction);

// Relative max-norm distance between normalized coefficient vectors, minimized over the
// overall sign so proportional conics compare equal.
double conic_distance(const Conic& lhs, const Conic& rhs);

inline bool approx_same_conic(const Conic& lhs, const Conic& rhs, double tol = kConicTolerance) {
  return conic_distance(lhs, rhs) <= tol;
}

}  // namespace inellipse
