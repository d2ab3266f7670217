#pragma once

#include <optional>
#include <vector>

#include "inellipse/canonical.hpp"
#include "inellipse/conic.hpp"
#include "inellipse/pencil.hpp"
#include "inellipse/quad.hpp"

namespace inellipse {

// p(τ) = a2·τ² + a1·τ + a0 with τ the pencil parameter; its roots in the open parameter
// interval are the pencil members passing through the query point.
struct QueryPolynomial {
  double a2 = 0.0;
  double a1 = 0.0;
  double a0 = 0.0;
  ShapeKind kind = ShapeKind::General;

  double operator()(double tau) const { return (a2 * tau + a1) * tau + a0; }
  double derivative(double tau) const { return 2.0 * a2 * tau + a1; }
};

struct CriticalData {
  double tau0 = 0.0;
  double p_at_tau0 = 0.0;
};

struct EndpointValues {
  double left = 0.0;   // p(interval.lo)
  double right = 0.0;  // p(interval.hi)
};

struct QuadraticRoots {
  int count = 0;  // 0, 1 (double root) or 2
  std::array<double, 2> roots{};  // ascending
};

// Cancellation-free real roots; discriminants in (-rel_tol·scale, 0) count as a double root.
QuadraticRoots solve_quadratic(double a2, double a1, double a0, double rel_tol = 1e-12);

// Throws Error(PointOutsideQuad) when p is outside the closed canonical quad.
QueryPolynomial point_polynomial(const CanonicalShape& shape, Point2 p);
inline QueryPolynomial point_polynomial(const CanonicalForm& cf, Point2 p) {
  return point_polynomial(cf.shape, p);
}

// Closed forms for p at the ends of the parameter interval (interval.lo first).
EndpointValues endpoint_values(const CanonicalShape& shape, Point2 p);

CriticalData critical_data(const QueryPolynomial& qp);

enum class QueryCase {
  TwoEllipses,
  OneEllipseOnDiagonal,
  NoneAtDiagonalIntersection,
  OneTangentOnBoundary,
};

std::string_view query_case_name(QueryCase c);

struct InscribedEllipse {
  Conic conic_original;
  Conic conic_canonical;
  PencilParam param;
  TangentPoints tangent_points_original;
  bool tangent_at_query = false;
};

struct QueryResult {
  QueryCase query_case = QueryCase::NoneAtDiagonalIntersection;
  QuadClass quad_class = QuadClass::GeneralPosition;
  CanonicalForm canonical;
  PointRegion region;
  std::vector<InscribedEllipse> ellipses;  // ascending param
};

struct SolveOptions {
  double eps = kDefaultEps;
  std::optional<int> label_start;  // forwarded to canonical_map
};

/// All ellipses inscribed in q passing through p0.
///
/// Throws Error(ExteriorPoint) or Error(VertexPoint) for points with no defined answer,
/// and Error(InternalInconsistency) if the root pattern disagrees with the point's region.
QueryResult solve_query(const ConvexQuad& q, Point2 p0, const SolveOptions& options = {});

// Pencil member of q with canonical parameter `value`, mapped back to original coordinates.
InscribedEllipse make_inscribed_ellipse(const CanonicalForm& cf, double value);

}  // namespace inellipse
