#include <algorithm>
#include <cmath>

#include "inellipse/kernels/pencil_scan.hpp"

namespace inellipse::kernels {

double pencil_equation_value(ShapeKind kind, double s, double t, double x, double y,
                             double tau) {
  switch (kind) {
    case ShapeKind::General: {
      const double sm1 = s - 1.0;
      const double tm1 = t - 1.0;
      const double inv = 1.0 / (2.0 * sm1);
      const double k4 = 4.0 * sm1 * sm1;
      const double L = (s - t) * inv + tau * (2.0 * tm1 * inv);
      const double dx = x - tau;
      const double dy = y - L;
      const double cross_coef = -4.0 * sm1 * ((2.0 * tm1 * tau + (s - t + 2.0)) * tau - s);
      const double rhs = (2.0 * tau - 1.0) * (2.0 * tm1 * tau + s) * (s - 2.0 * tau);
      return k4 * L * L * dx * dx + k4 * tau * tau * dy * dy + cross_coef * dx * dy - rhs;
    }
    case ShapeKind::Trapezoid: {
      const double tm1 = t - 1.0;
      const double w = 2.0 * tau - t;
      return 4.0 * tau * tau * tm1 * tm1 * x * x + tm1 * tm1 * y * y +
             4.0 * (1.0 - t) * (t * tau - t + tau) * x * y + 4.0 * tau * tm1 * w * x +
             2.0 * tm1 * w * y + w * w;
    }
    case ShapeKind::Square:
      return x * x + y * y + 2.0 * (2.0 * tau - 1.0) * x * y - 2.0 * tau * x - 2.0 * tau * y +
             tau * tau;
  }
  return 0.0;
}

namespace detail {

double evaluate_scalar(const PencilGrid& grid, std::span<double> out) {
  const std::size_t n = out.size();
  const double step = (grid.hi - grid.lo) / static_cast<double>(n + 1);
  double max_abs = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double tau = grid.lo + static_cast<double>(i + 1) * step;
    const double v = pencil_equation_value(grid.kind, grid.s, grid.t, grid.x, grid.y, tau);
    out[i] = v;
    max_abs = std::max(max_abs, std::abs(v));
  }
  return max_abs;
}

}  // namespace detail
}  // namespace inellipse::kernels
