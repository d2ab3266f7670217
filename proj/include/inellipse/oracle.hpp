#pragma once

#include <array>
#include <span>

#include "inellipse/canonical.hpp"
#include "inellipse/conic.hpp"
#include "inellipse/quad.hpp"

namespace inellipse {

struct SideTangency {
  double discriminant_residual = 0.0;  // |discriminant| / SegmentContact::scale
  double contact_param = 0.0;          // double-root position along the side, vertex i -> i+1
};

struct InscribedReport {
  bool is_ellipse = false;
  std::array<SideTangency, 4> side_tangency{};  // side i joins vertex i and i+1 of the quad
  int containment_violations = 0;
  double max_point_residual = 0.0;  // max |conic| over the boundary samples, normalized conic
  double tol = 0.0;

  // contact_margin tightens (0,1) to (margin, 1 - margin).
  bool passed(double contact_margin = 0.0) const;
  double max_discriminant_residual() const;
};

inline constexpr int kContainmentSamples = 256;

/// Brute-force check that `conic` is an ellipse tangent to all four sides of q at interior
/// side points, and that 256 sampled boundary points lie in q (half-plane slack tol·diameter).
InscribedReport verify_inscribed(const ConvexQuad& q, const Conic& conic, double tol = 1e-9);

struct ScanOutcome {
  int sign_changes = 0;
  int plateaus = 0;  // zero runs with the same sign on both sides: double roots
  double max_abs = 0.0;
  double min_abs = 0.0;

  int roots() const { return sign_changes + plateaus; }
};

inline constexpr double kScanZeroTol = 1e-9;

/// Scans the pencil equation at p (canonical coordinates) over grid_n nodes strictly
/// inside the parameter interval. Values with |p| <= zero_tol·max|p| count as zero; zero
/// runs touching either end of the grid are attributed to the excluded endpoints.
/// Throws Error(InvalidArgument) for grid_n < 1000.
ScanOutcome scan_pencil(const CanonicalShape& shape, Point2 p, std::size_t grid_n,
                        double zero_tol = kScanZeroTol);

int count_by_scan(const CanonicalForm& cf, Point2 p, std::size_t grid_n);

// True iff every center lies within tol of segment M1M2 of the canonical quad.
bool centers_on_newton_segment(const CanonicalShape& shape, std::span<const Conic> conics,
                               double tol);
bool check_newton_segment(const CanonicalForm& cf, int n_params, double tol);

// Proof instruments, exercised by tests only.
double general_positivity_f(const GeneralShape& shape, double x, double y);
double trapezoid_positivity_g(const TrapezoidShape& shape, double x, double y);
double trapezoid_positivity_h(const TrapezoidShape& shape, double x, double y);

struct EllipseDiscriminants {
  double quadratic = 0.0;     // ab - c²
  double nontrivial = 0.0;    // a·e² + b·d² + 4f·c² - 2c·d·e - 4ab·f
};
EllipseDiscriminants ellipse_discriminants(const Conic& conic);

}  // namespace inellipse
