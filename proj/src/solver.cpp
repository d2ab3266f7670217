#include "inellipse/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "inellipse/error.hpp"

namespace inellipse {

namespace {

void require_inside(const CanonicalShape& shape, Point2 p, double tol) {
  const auto v = canonical_vertices(shape);
  double diam = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) diam = std::max(diam, distance(v[i], v[j]));
  }
  for (std::size_t i = 0; i < 4; ++i) {
    const Point2 edge = v[(i + 1) % 4] - v[i];
    if (cross(edge, p - v[i]) / norm(edge) < -tol * diam) {
      throw Error(ErrorCode::PointOutsideQuad, "point lies outside the canonical quadrilateral");
    }
  }
}

[[noreturn]] void inconsistent(const std::string& what) {
  throw Error(ErrorCode::InternalInconsistency, what);
}

}  // namespace

QuadraticRoots solve_quadratic(double a2, double a1, double a0, double rel_tol) {
  QuadraticRoots out;
  if (a2 == 0.0) {
    if (a1 != 0.0) {
      out.count = 1;
      out.roots = {-a0 / a1, -a0 / a1};
    }
    return out;
  }
  const double disc = a1 * a1 - 4.0 * a2 * a0;
  const double scale = a1 * a1 + std::abs(4.0 * a2 * a0);
  if (disc < -rel_tol * scale) return out;
  if (disc <= 0.0) {
    out.count = 1;
    out.roots = {-a1 / (2.0 * a2), -a1 / (2.0 * a2)};
    return out;
  }
  const double q = -0.5 * (a1 + std::copysign(std::sqrt(disc), a1));
  double r1 = q / a2;
  double r2 = a0 / q;
  if (r1 > r2) std::swap(r1, r2);
  out.count = 2;
  out.roots = {r1, r2};
  return out;
}

namespace {

QueryPolynomial collect_polynomial(const CanonicalShape& shape, Point2 p) {
  const double x = p.x;
  const double y = p.y;
  QueryPolynomial out;
  out.kind = shape_kind(shape);
  if (const auto* g = std::get_if<GeneralShape>(&shape)) {
    const double s = g->s;
    const double t = g->t;
    const double lin = (t - 1.0) * x - (s - 1.0) * y;
    const double f = lin * lin + 2.0 * (t - 1.0) * x + 2.0 * (s - 1.0) * y + 1.0;
    const double w = (s - t) * x - s;
    out.a2 = 4.0 * f;
    out.a1 = 4.0 * (((t - 1.0) * x + 1.0) * w - (s - 1.0) * y * (s + (s - t + 2.0) * x));
    out.a0 = w * w + 4.0 * s * (s - 1.0) * x * y;
  } else if (const auto* z = std::get_if<TrapezoidShape>(&shape)) {
    const double t = z->t;
    const double lead = x * t - x + 1.0;
    out.a2 = 4.0 * lead * lead;
    out.a1 = 4.0 * (t * x - y * x * t * t - x * t * t - y + y * t - t + y * x);
    out.a0 = (t + y) * (t + y) + t * y * (y * t - 2.0 * t - 2.0 * y) + 4.0 * t * x * y * (t - 1.0);
  } else {
    out.a2 = 1.0;
    out.a1 = 2.0 * (2.0 * x * y - x - y);
    out.a0 = (x - y) * (x - y);
  }
  return out;
}

}  // namespace

QueryPolynomial point_polynomial(const CanonicalShape& shape, Point2 p) {
  require_inside(shape, p, 1e-9);
  return collect_polynomial(shape, p);
}

EndpointValues endpoint_values(const CanonicalShape& shape, Point2 p) {
  require_inside(shape, p, 1e-9);
  const double x = p.x;
  const double y = p.y;
  const double anti = x + y - 1.0;
  if (const auto* g = std::get_if<GeneralShape>(&shape)) {
    const double sm1 = g->s - 1.0;
    const double at_half = anti * anti * sm1 * sm1;
    const double main = g->s * y - g->t * x;
    const double at_far = main * main * sm1 * sm1;
    return g->s > 1.0 ? EndpointValues{at_half, at_far} : EndpointValues{at_far, at_half};
  }
  if (const auto* z = std::get_if<TrapezoidShape>(&shape)) {
    const double tm1 = z->t - 1.0;
    const double at_half = anti * anti * tm1 * tm1;
    const double main = z->t * x - y;
    const double at_far = tm1 * tm1 * main * main;
    return z->t > 1.0 ? EndpointValues{at_half, at_far} : EndpointValues{at_far, at_half};
  }
  return EndpointValues{(x - y) * (x - y), anti * anti};
}

CriticalData critical_data(const QueryPolynomial& qp) {
  if (!(qp.a2 > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "critical data requires a positive leading coefficient");
  }
  return CriticalData{-qp.a1 / (2.0 * qp.a2), qp.a0 - qp.a1 * qp.a1 / (4.0 * qp.a2)};
}

std::string_view query_case_name(QueryCase c) {
  switch (c) {
    case QueryCase::TwoEllipses: return "two_ellipses";
    case QueryCase::OneEllipseOnDiagonal: return "one_ellipse_on_diagonal";
    case QueryCase::NoneAtDiagonalIntersection: return "none_at_diagonal_intersection";
    case QueryCase::OneTangentOnBoundary: return "one_tangent_on_boundary";
  }
  return "unknown";
}

InscribedEllipse make_inscribed_ellipse(const CanonicalForm& cf, double value) {
  InscribedEllipse out;
  out.param = PencilParam{cf.kind(), value};
  out.conic_canonical = inscribed_conic(cf, out.param);
  out.conic_original = pullback(out.conic_canonical, cf.map);
  const TangentPoints canonical = tangent_points(cf, out.param);
  for (std::size_t i = 0; i < 4; ++i) {
    out.tangent_points_original.zeta[i] = cf.inverse(canonical.zeta[i]);
  }
  return out;
}

QueryResult solve_query(const ConvexQuad& q, Point2 p0, const SolveOptions& options) {
  const double eps = options.eps;
  QueryResult result;
  result.region = locate_point(q, p0, eps);
  switch (result.region.kind) {
    case RegionKind::Exterior:
      throw Error(ErrorCode::ExteriorPoint, "query point lies outside the quadrilateral");
    case RegionKind::Vertex:
      throw Error(ErrorCode::VertexPoint, "query point is a vertex of the quadrilateral");
    default:
      break;
  }

  result.quad_class = classify(q, eps);
  result.canonical = canonical_map(q, eps, options.label_start);
  const CanonicalForm& cf = result.canonical;
  const Point2 local = cf.map(p0);
  const ParamInterval interval = param_interval(cf);
  const double margin = eps * interval.width();

  // locate_point already admitted p0; boundary points may map a rounding error outside.
  const QueryPolynomial qp = collect_polynomial(cf.shape, local);

  std::vector<double> params;
  double residual_slack = 1.0;
  if (result.region.kind == RegionKind::BoundarySide) {
    result.query_case = QueryCase::OneTangentOnBoundary;
    const CriticalData crit = critical_data(qp);
    const double scale = std::max(std::abs(qp.a0), qp.a1 * qp.a1 / (4.0 * qp.a2));
    if (std::abs(crit.p_at_tau0) > std::sqrt(eps) * scale) {
      inconsistent("boundary point without a double root (p(tau0) = " +
                   std::to_string(crit.p_at_tau0) + ")");
    }
    if (!interval.contains(crit.tau0, margin)) {
      inconsistent("boundary double root " + std::to_string(crit.tau0) +
                   " outside the parameter interval");
    }
    params.push_back(crit.tau0);
    residual_slack = 1e3;
  } else {
    const QuadraticRoots roots = solve_quadratic(qp.a2, qp.a1, qp.a0);
    for (int i = 0; i < roots.count; ++i) {
      const double r = roots.roots[static_cast<std::size_t>(i)];
      if (interval.contains(r, margin)) params.push_back(r);
    }
    if (roots.count == 1 && !params.empty()) params.resize(1);

    std::size_t expected = 0;
    switch (result.region.kind) {
      case RegionKind::InteriorGeneric:
        result.query_case = QueryCase::TwoEllipses;
        expected = 2;
        break;
      case RegionKind::InteriorOnDiagonal:
        result.query_case = QueryCase::OneEllipseOnDiagonal;
        expected = 1;
        break;
      default:
        result.query_case = QueryCase::NoneAtDiagonalIntersection;
        expected = 0;
        break;
    }
    if (params.size() != expected) {
      inconsistent(std::to_string(params.size()) + " admissible roots for a point classified " +
                   region_name(result.region.kind));
    }
  }

  std::sort(params.begin(), params.end());
  const double residual_tol = residual_slack * std::max(eps, 1e-12);
  for (double value : params) {
    InscribedEllipse ellipse = make_inscribed_ellipse(cf, value);
    ellipse.tangent_at_query = result.query_case == QueryCase::OneTangentOnBoundary;
    const double residual = std::abs(evaluate(ellipse.conic_original, p0));
    if (residual > residual_tol * evaluation_scale(ellipse.conic_original, p0)) {
      inconsistent("ellipse misses the query point (residual " + std::to_string(residual) + ")");
    }
    result.ellipses.push_back(std::move(ellipse));
  }
  return result;
}

}  // namespace inellipse
