#pragma once

// Test-side oracles, written independently of the library's evaluation paths.

#include <array>
#include <cmath>

#include "inellipse/conic.hpp"
#include "inellipse/geometry.hpp"

namespace inellipse::testing {

// Ellipse family for the general canonical quad, left side minus right side, as printed
// in centered form.
inline double general_family_centered(double s, double t, double h, double x, double y) {
  const double L = 0.5 * (s - t + 2.0 * h * (t - 1.0)) / (s - 1.0);
  const double c = 2.0 * (t - 1.0) * h * h + (s - t + 2.0) * h - s;
  return 4.0 * (s - 1.0) * (s - 1.0) * L * L * (x - h) * (x - h) +
         4.0 * (s - 1.0) * (s - 1.0) * h * h * (y - L) * (y - L) -
         4.0 * (s - 1.0) * c * (x - h) * (y - L) -
         (2.0 * h - 1.0) * (2.0 * (t - 1.0) * h + s) * (s - 2.0 * h);
}

// Trapezoid family with the constant moved to the left side.
inline double trapezoid_family(double t, double k, double x, double y) {
  return 4.0 * k * k * (t - 1.0) * (t - 1.0) * x * x + (t - 1.0) * (t - 1.0) * y * y +
         4.0 * (1.0 - t) * (t * k - t + k) * x * y + 4.0 * k * (t - 1.0) * (2.0 * k - t) * x +
         2.0 * (t - 1.0) * (2.0 * k - t) * y + (2.0 * k - t) * (2.0 * k - t);
}

inline double square_family(double v, double x, double y) {
  return x * x + y * y + 2.0 * (2.0 * v - 1.0) * x * y - 2.0 * v * x - 2.0 * v * y + v * v;
}

// Cramer's rule on the gradient system.
inline Point2 cramer_center(const Conic& k) {
  const double m00 = 2.0 * k.a, m01 = 2.0 * k.c, m10 = 2.0 * k.c, m11 = 2.0 * k.b;
  const double det = m00 * m11 - m01 * m10;
  return {((-k.d) * m11 - m01 * (-k.e)) / det, (m00 * (-k.e) - (-k.d) * m10) / det};
}

// Six coefficients recovered from six samples of a quadratic function by finite
// differences around the origin (exact for quadratics up to rounding).
template <class F>
Conic conic_from_samples(F&& fn) {
  const double f00 = fn(0.0, 0.0);
  const double fx1 = fn(1.0, 0.0), fxm = fn(-1.0, 0.0);
  const double fy1 = fn(0.0, 1.0), fym = fn(0.0, -1.0);
  const double f11 = fn(1.0, 1.0);
  const double a = 0.5 * (fx1 + fxm) - f00;
  const double b = 0.5 * (fy1 + fym) - f00;
  const double d = 0.5 * (fx1 - fxm);
  const double e = 0.5 * (fy1 - fym);
  const double c = 0.5 * (f11 - a - b - d - e - f00);
  return Conic{a, b, c, d, e, f00};
}

}  // namespace inellipse::testing
