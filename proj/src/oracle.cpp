#include "inellipse/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "inellipse/error.hpp"
#include "inellipse/kernels/pencil_scan.hpp"
#include "inellipse/pencil.hpp"

namespace inellipse {

namespace {

double distance_to_segment(Point2 p, Point2 a, Point2 b) {
  const Point2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(p, a);
  const double u = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + u * ab);
}

std::vector<double>& scan_buffer() {
  thread_local std::vector<double> buffer;
  return buffer;
}

}  // namespace

bool InscribedReport::passed(double contact_margin) const {
  if (!is_ellipse || containment_violations != 0) return false;
  return std::all_of(side_tangency.begin(), side_tangency.end(), [&](const SideTangency& s) {
    return s.discriminant_residual <= tol && s.contact_param > contact_margin &&
           s.contact_param < 1.0 - contact_margin;
  });
}

double InscribedReport::max_discriminant_residual() const {
  double worst = 0.0;
  for (const auto& s : side_tangency) worst = std::max(worst, s.discriminant_residual);
  return worst;
}

InscribedReport verify_inscribed(const ConvexQuad& q, const Conic& conic, double tol) {
  InscribedReport report;
  report.tol = tol;
  report.is_ellipse = is_nontrivial_ellipse(conic);
  const Conic k = conic.normalized();
  const auto& v = q.vertices();

  for (std::size_t i = 0; i < 4; ++i) {
    const SegmentContact contact = segment_contact(k, v[i], v[(i + 1) % 4]);
    auto& side = report.side_tangency[i];
    side.discriminant_residual =
        contact.scale > 0.0 ? std::abs(contact.discriminant) / contact.scale
                            : (contact.discriminant == 0.0 ? 0.0 : INFINITY);
    side.contact_param = std::isfinite(contact.u) ? contact.u : -1.0;
  }

  if (!report.is_ellipse) {
    report.containment_violations = kContainmentSamples;
    return report;
  }

  const EllipseParams params = geometric_params(k);
  const double slack = tol * q.diameter();
  for (int j = 0; j < kContainmentSamples; ++j) {
    const double angle = 2.0 * std::numbers::pi * j / kContainmentSamples;
    const Point2 p = params.point_at(angle);
    report.max_point_residual = std::max(report.max_point_residual, std::abs(evaluate(k, p)));
    for (std::size_t i = 0; i < 4; ++i) {
      const Point2 edge = v[(i + 1) % 4] - v[i];
      if (cross(edge, p - v[i]) / norm(edge) < -slack) {
        ++report.containment_violations;
        break;
      }
    }
  }
  return report;
}

ScanOutcome scan_pencil(const CanonicalShape& shape, Point2 p, std::size_t grid_n,
                        double zero_tol) {
  if (grid_n < 1000) throw Error(ErrorCode::InvalidArgument, "scan grid needs at least 1000 nodes");
  const ParamInterval interval = param_interval(shape);
  kernels::PencilGrid grid;
  grid.kind = shape_kind(shape);
  if (const auto* g = std::get_if<GeneralShape>(&shape)) {
    grid.s = g->s;
    grid.t = g->t;
  } else if (const auto* z = std::get_if<TrapezoidShape>(&shape)) {
    grid.t = z->t;
  }
  grid.x = p.x;
  grid.y = p.y;
  grid.lo = interval.lo;
  grid.hi = interval.hi;

  auto& values = scan_buffer();
  values.resize(grid_n);
  ScanOutcome out;
  out.max_abs = kernels::evaluate_pencil_grid(grid, values);
  const double threshold = zero_tol * out.max_abs;

  int previous = 0;  // sign of the last value outside the zero band; 0 before the first
  bool zero_run = false;
  double min_abs = INFINITY;
  for (double value : values) {
    const double magnitude = std::abs(value);
    min_abs = std::min(min_abs, magnitude);
    if (magnitude <= threshold) {
      if (previous != 0) zero_run = true;
      continue;
    }
    const int sign = value > 0.0 ? 1 : -1;
    if (previous != 0) {
      if (sign != previous) {
        ++out.sign_changes;
      } else if (zero_run) {
        ++out.plateaus;
      }
    }
    zero_run = false;
    previous = sign;
  }
  out.min_abs = min_abs;
  return out;
}

int count_by_scan(const CanonicalForm& cf, Point2 p, std::size_t grid_n) {
  return scan_pencil(cf.shape, p, grid_n).roots();
}

bool centers_on_newton_segment(const CanonicalShape& shape, std::span<const Conic> conics,
                               double tol) {
  Point2 m1{0.5, 0.5};
  Point2 m2{0.5, 0.5};
  if (const auto* g = std::get_if<GeneralShape>(&shape)) m2 = {0.5 * g->s, 0.5 * g->t};
  if (const auto* z = std::get_if<TrapezoidShape>(&shape)) m2 = {0.5, 0.5 * z->t};
  for (const Conic& conic : conics) {
    Point2 c;
    try {
      c = center(conic);
    } catch (const Error&) {
      return false;
    }
    if (!(distance_to_segment(c, m1, m2) <= tol)) return false;
  }
  return true;
}

bool check_newton_segment(const CanonicalForm& cf, int n_params, double tol) {
  if (n_params < 2) throw Error(ErrorCode::InvalidArgument, "need at least two pencil members");
  const ParamInterval interval = param_interval(cf);
  std::vector<Conic> conics;
  conics.reserve(static_cast<std::size_t>(n_params));
  const auto n = static_cast<std::size_t>(n_params);
  for (std::size_t i = 0; i < n; ++i) {
    conics.push_back(inscribed_conic(cf, PencilParam{cf.kind(), interval.node(i, n)}));
  }
  return centers_on_newton_segment(cf.shape, conics, tol);
}

double general_positivity_f(const GeneralShape& g, double x, double y) {
  const double lin = (g.t - 1.0) * x - (g.s - 1.0) * y;
  return lin * lin + 2.0 * (g.t - 1.0) * x + 2.0 * (g.s - 1.0) * y + 1.0;
}

double trapezoid_positivity_g(const TrapezoidShape& z, double x, double y) {
  return (x - 1.0) * (x - 1.0) + (y - z.t * x) * (x - 1.0) + z.t * x * y;
}

double trapezoid_positivity_h(const TrapezoidShape& z, double x, double y) {
  return z.t * (z.t - 1.0) * x * x - (z.t + 1.0) * x * y + z.t * x + y;
}

EllipseDiscriminants ellipse_discriminants(const Conic& conic) {
  Conic k = conic.normalized();
  if (k.a < 0.0) k = {-k.a, -k.b, -k.c, -k.d, -k.e, -k.f};
  return {k.a * k.b - k.c * k.c, k.a * k.e * k.e + k.b * k.d * k.d + 4.0 * k.f * k.c * k.c -
                                     2.0 * k.c * k.d * k.e - 4.0 * k.a * k.b * k.f};
}

}  // namespace inellipse
