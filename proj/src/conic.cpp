#include "inellipse/conic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "inellipse/error.hpp"

namespace inellipse {

double Conic::max_abs_coefficient() const {
  double m = 0.0;
  for (double k : coefficients()) m = std::max(m, std::abs(k));
  return m;
}

Conic Conic::normalized() const {
  auto k = coefficients();
  if (!std::all_of(k.begin(), k.end(), [](double v) { return std::isfinite(v); })) {
    throw Error(ErrorCode::InvalidArgument, "conic has non-finite coefficients");
  }
  const double m = max_abs_coefficient();
  if (m == 0.0) throw Error(ErrorCode::InvalidArgument, "conic has all-zero coefficients");
  const auto lead = std::find_if(k.begin(), k.end(), [](double v) { return v != 0.0; });
  const double divisor = *lead < 0.0 ? -m : m;
  for (double& v : k) v /= divisor;
  return from_coefficients(k);
}

Point2 EllipseParams::point_at(double angle) const {
  const double ca = std::cos(rotation);
  const double sa = std::sin(rotation);
  const double u = semi_major * std::cos(angle);
  const double v = semi_minor * std::sin(angle);
  return {center.x + ca * u - sa * v, center.y + sa * u + ca * v};
}

double evaluate(const Conic& k, Point2 p) {
  return k.a * p.x * p.x + k.b * p.y * p.y + 2.0 * k.c * p.x * p.y + k.d * p.x + k.e * p.y +
         k.f;
}

double evaluation_scale(const Conic& k, Point2 p) {
  return std::abs(k.a) * p.x * p.x + std::abs(k.b) * p.y * p.y +
         2.0 * std::abs(k.c * p.x * p.y) + std::abs(k.d * p.x) + std::abs(k.e * p.y) +
         std::abs(k.f);
}

Point2 gradient(const Conic& k, Point2 p) {
  return {2.0 * k.a * p.x + 2.0 * k.c * p.y + k.d, 2.0 * k.c * p.x + 2.0 * k.b * p.y + k.e};
}

namespace {

Conic oriented(const Conic& conic) {
  Conic k = conic.normalized();
  if (k.a < 0.0) k = {-k.a, -k.b, -k.c, -k.d, -k.e, -k.f};
  return k;
}

}  // namespace

bool is_nontrivial_ellipse(const Conic& conic) {
  if (conic.max_abs_coefficient() == 0.0) return false;
  const Conic k = oriented(conic);
  const double quadratic = k.a * k.b - k.c * k.c;
  const double nontrivial = k.a * k.e * k.e + k.b * k.d * k.d + 4.0 * k.f * k.c * k.c -
                            2.0 * k.c * k.d * k.e - 4.0 * k.a * k.b * k.f;
  return k.a > 0.0 && k.b > 0.0 && quadratic > 0.0 && nontrivial > 0.0;
}

Point2 center(const Conic& k) {
  // 2a·x + 2c·y = -d, 2c·x + 2b·y = -e
  const double det = 4.0 * (k.a * k.b - k.c * k.c);
  const double scale = 4.0 * std::max(std::abs(k.a * k.b), k.c * k.c);
  if (det == 0.0 || std::abs(det) <= 1e-14 * scale) {
    throw Error(ErrorCode::NotAnEllipse, "conic has no unique center");
  }
  return {(-k.d * 2.0 * k.b + k.e * 2.0 * k.c) / det, (-k.e * 2.0 * k.a + k.d * 2.0 * k.c) / det};
}

Conic pullback(const Conic& k, const AffineMap2& map) {
  // Extended precision: the translated constant term cancels heavily for small quads far
  // from the origin.
  using L = long double;
  const auto& mm = map.linear();
  const L m0 = mm[0], m1 = mm[1], m2 = mm[2], m3 = mm[3];
  const L ox = map.offset().x, oy = map.offset().y;
  const L ka = k.a, kb = k.b, kc = k.c, kd = k.d, ke = k.e, kf = k.f;
  // x = m0·X + m1·Y + ox, y = m2·X + m3·Y + oy
  const L a = ka * m0 * m0 + kb * m2 * m2 + 2 * kc * m0 * m2;
  const L b = ka * m1 * m1 + kb * m3 * m3 + 2 * kc * m1 * m3;
  const L c = ka * m0 * m1 + kb * m2 * m3 + kc * (m0 * m3 + m1 * m2);
  const L gx = 2 * ka * ox + 2 * kc * oy + kd;
  const L gy = 2 * kc * ox + 2 * kb * oy + ke;
  const L d = gx * m0 + gy * m2;
  const L e = gx * m1 + gy * m3;
  const L f = ka * ox * ox + kb * oy * oy + 2 * kc * ox * oy + kd * ox + ke * oy + kf;
  L big = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d), std::abs(e), std::abs(f)});
  if (big == 0 || !std::isfinite(static_cast<double>(big))) {
    throw Error(ErrorCode::InvalidArgument, "pullback produced a degenerate conic");
  }
  return Conic{static_cast<double>(a / big), static_cast<double>(b / big), static_cast<double>(c / big),
               static_cast<double>(d / big), static_cast<double>(e / big), static_cast<double>(f / big)}
      .normalized();
}

EllipseParams geometric_params(const Conic& conic) {
  if (!is_nontrivial_ellipse(conic)) {
    throw Error(ErrorCode::NotAnEllipse, "geometric parameters require a nontrivial ellipse");
  }
  const Conic k = oriented(conic);
  EllipseParams out;
  out.center = center(k);
  const double value_at_center = evaluate(k, out.center);  // negative for a real ellipse
  const double mean = 0.5 * (k.a + k.b);
  const double half_gap = std::hypot(0.5 * (k.a - k.b), k.c);
  const double lambda_small = mean - half_gap;
  const double lambda_large = mean + half_gap;
  out.semi_major = std::sqrt(-value_at_center / lambda_small);
  out.semi_minor = std::sqrt(-value_at_center / lambda_large);

  if (half_gap <= 1e-14 * mean) {
    out.rotation = 0.0;
    return out;
  }
  // Eigenvector of the larger eigenvalue has angle atan2(2c, a - b)/2; the major axis is
  // perpendicular to it.
  double angle = 0.5 * std::atan2(2.0 * k.c, k.a - k.b) + 0.5 * std::numbers::pi;
  while (angle > 0.5 * std::numbers::pi) angle -= std::numbers::pi;
  while (angle <= -0.5 * std::numbers::pi) angle += std::numbers::pi;
  out.rotation = angle;
  return out;
}

LineRestriction restrict_to_line(const Conic& k, Point2 origin, Point2 direction) {
  const Point2 g = gradient(k, origin);
  LineRestriction r;
  r.alpha = k.a * direction.x * direction.x + k.b * direction.y * direction.y +
            2.0 * k.c * direction.x * direction.y;
  r.beta = dot(g, direction);
  r.gamma = evaluate(k, origin);
  return r;
}

double conic_distance(const Conic& lhs, const Conic& rhs) {
  const auto l = lhs.normalized().coefficients();
  const auto r = rhs.normalized().coefficients();
  double same = 0.0;
  double flipped = 0.0;
  for (std::size_t i = 0; i < 6; ++i) {
    same = std::max(same, std::abs(l[i] - r[i]));
    flipped = std::max(flipped, std::abs(l[i] + r[i]));
  }
  return std::min(same, flipped);
}

}  // namespace inellipse
