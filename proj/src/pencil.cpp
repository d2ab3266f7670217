#include "inellipse/pencil.hpp"

#include <cmath>
#include <string>

#include "inellipse/error.hpp"

namespace inellipse {

namespace {

double check_param(const CanonicalShape& shape, PencilParam param) {
  if (param.kind != shape_kind(shape)) {
    throw Error(ErrorCode::InvalidArgument,
                std::string("pencil parameter is tagged ") +
                    std::string(shape_kind_name(param.kind)) + " but the shape is " +
                    std::string(shape_kind_name(shape_kind(shape))));
  }
  const ParamInterval interval = param_interval(shape);
  if (!std::isfinite(param.value) || !interval.contains(param.value, kParamMembershipTol)) {
    throw Error(ErrorCode::ParamOutOfInterval,
                "pencil parameter " + std::to_string(param.value) + " outside (" +
                    std::to_string(interval.lo) + ", " + std::to_string(interval.hi) + ")");
  }
  return param.value;
}

Conic general_conic(const GeneralShape& g, double h) {
  const double s = g.s;
  const double t = g.t;
  const double L = newton_height(g, h);
  const double sm1 = s - 1.0;
  const double s2h = s - 2.0 * h;
  return Conic{4.0 * sm1 * sm1 * L * L,
               4.0 * sm1 * sm1 * h * h,
               -2.0 * sm1 * (2.0 * (t - 1.0) * h * h + (s - t + 2.0) * h - s),
               -2.0 * s2h * (s - t + 2.0 * h * (t - 1.0)),
               -4.0 * h * sm1 * s2h,
               s2h * s2h};
}

Conic trapezoid_conic(const TrapezoidShape& z, double k) {
  const double t = z.t;
  const double tm1 = t - 1.0;
  const double w = 2.0 * k - t;
  return Conic{4.0 * k * k * tm1 * tm1,
               tm1 * tm1,
               2.0 * (1.0 - t) * (t * k - t + k),
               4.0 * k * tm1 * w,
               2.0 * tm1 * w,
               w * w};
}

Conic square_conic(double v) { return Conic{1.0, 1.0, 2.0 * v - 1.0, -2.0 * v, -2.0 * v, v * v}; }

}  // namespace

ParamInterval param_interval(const CanonicalShape& shape) {
  if (const auto* g = std::get_if<GeneralShape>(&shape)) {
    return g->s > 1.0 ? ParamInterval{0.5, 0.5 * g->s} : ParamInterval{0.5 * g->s, 0.5};
  }
  if (const auto* z = std::get_if<TrapezoidShape>(&shape)) {
    return z->t > 1.0 ? ParamInterval{0.5, 0.5 * z->t} : ParamInterval{0.5 * z->t, 0.5};
  }
  return ParamInterval{0.0, 1.0};
}

double newton_height(const GeneralShape& g, double h) {
  return 0.5 * (g.s - g.t + 2.0 * h * (g.t - 1.0)) / (g.s - 1.0);
}

Point2 pencil_center(const CanonicalShape& shape, double value) {
  if (const auto* g = std::get_if<GeneralShape>(&shape)) return {value, newton_height(*g, value)};
  if (std::holds_alternative<TrapezoidShape>(shape)) return {0.5, value};
  return {0.5, 0.5};
}

Conic inscribed_conic(const CanonicalShape& shape, PencilParam param) {
  const double value = check_param(shape, param);
  if (const auto* g = std::get_if<GeneralShape>(&shape)) return general_conic(*g, value).normalized();
  if (const auto* z = std::get_if<TrapezoidShape>(&shape)) {
    return trapezoid_conic(*z, value).normalized();
  }
  return square_conic(value).normalized();
}

namespace {

struct WideRestriction {
  long double alpha, beta, gamma;
};

// restrict_to_line in extended precision; gamma cancels heavily near a contact point.
WideRestriction wide_restriction(const Conic& k, Point2 origin, Point2 direction) {
  using L = long double;
  const L a = k.a, b = k.b, c = k.c, d = k.d, e = k.e, f = k.f;
  const L x = origin.x, y = origin.y, dx = direction.x, dy = direction.y;
  return {a * dx * dx + b * dy * dy + 2 * c * dx * dy,
          (2 * a * x + 2 * c * y + d) * dx + (2 * c * x + 2 * b * y + e) * dy,
          a * x * x + b * y * y + 2 * c * x * y + d * x + e * y + f};
}

}  // namespace

SegmentContact segment_contact(const Conic& conic, Point2 p, Point2 q) {
  const Point2 direction = q - p;
  const WideRestriction r = wide_restriction(conic, p, direction);
  SegmentContact out;
  out.u = static_cast<double>(-r.beta / (2 * r.alpha));
  out.point = p + out.u * direction;
  // Same discriminant, re-anchored at the contact estimate where beta and gamma are small.
  const WideRestriction at = wide_restriction(conic, out.point, direction);
  out.discriminant = static_cast<double>(at.beta * at.beta - 4 * at.alpha * at.gamma);
  // Term magnitudes anchored at both ends, so the scale does not depend on side direction.
  const long double beta_q = 2 * r.alpha + r.beta;
  const long double gamma_q = r.alpha + r.beta + r.gamma;
  out.scale = static_cast<double>(r.beta * r.beta + std::abs(4 * r.alpha * r.gamma) + beta_q * beta_q +
                                  std::abs(4 * r.alpha * gamma_q));
  return out;
}

TangentPoints tangent_points(const CanonicalShape& shape, PencilParam param) {
  const double value = check_param(shape, param);
  TangentPoints out;
  if (const auto* g = std::get_if<GeneralShape>(&shape)) {
    const double s = g->s;
    const double t = g->t;
    const double h = value;
    const double side_weight = s + 2.0 * h * (t - 1.0);
    const double den4 = s * (s + t - 2.0) - 2.0 * (t - 1.0) * h;
    out.zeta[0] = {(s - 2.0 * h) / (2.0 * (t - 1.0) * h + s - t), 0.0};
    out.zeta[1] = {0.0, (s - 2.0 * h) / (2.0 * (s - 1.0) * h)};
    out.zeta[2] = {side_weight / (t + s - 2.0 * h),
                   (2.0 * h - 1.0) * t * t / ((s - 1.0) * (s + t - 2.0 * h))};
    out.zeta[3] = {(2.0 * h - 1.0) * s * s / den4, side_weight * (s - 1.0) / den4};
    return out;
  }
  if (const auto* z = std::get_if<TrapezoidShape>(&shape)) {
    const double t = z->t;
    const double k = value;
    out.zeta[0] = {(2.0 * k - t) / (2.0 * k * (1.0 - t)), 0.0};
    out.zeta[1] = {0.0, (2.0 * k - t) / (1.0 - t)};
    out.zeta[2] = {1.0, t * (1.0 - 2.0 * k) / (1.0 - t)};
    out.zeta[3] = {(1.0 - 2.0 * k) / ((1.0 - t) * (t + 1.0 - 2.0 * k)), t / (t + 1.0 - 2.0 * k)};
    return out;
  }
  const Conic conic = square_conic(value);
  const auto sides = canonical_sides(shape);
  for (std::size_t i = 0; i < 4; ++i) {
    out.zeta[i] = segment_contact(conic, sides[i][0], sides[i][1]).point;
  }
  return out;
}

}  // namespace inellipse
