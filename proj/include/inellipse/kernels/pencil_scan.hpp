#pragma once

#include <span>
#include <string_view>

#include "inellipse/shape_kind.hpp"

namespace inellipse::kernels {

// Query point (x, y) against the pencil of canonical shape `kind` (s ignored unless
// General; t ignored for Square), sampled at n nodes lo + (i+1)·(hi-lo)/(n+1).
struct PencilGrid {
  ShapeKind kind = ShapeKind::General;
  double s = 0.0;
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double lo = 0.0;
  double hi = 1.0;
};

enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend backend);
bool backend_available(Backend backend);
// Widest backend the running CPU supports; resolved once.
Backend best_backend();

/// Writes the pencil equation (left side minus right side, by direct substitution of
/// (x, y, τ) into the printed family) at out.size() grid nodes. Returns max |value|.
/// Throws Error(InvalidArgument) if `backend` is unavailable on this CPU.
double evaluate_pencil_grid(const PencilGrid& grid, std::span<double> out, Backend backend);
double evaluate_pencil_grid(const PencilGrid& grid, std::span<double> out);

// Single-node reference evaluation, shared by the scalar kernel.
double pencil_equation_value(ShapeKind kind, double s, double t, double x, double y,
                             double tau);

namespace detail {
double evaluate_scalar(const PencilGrid& grid, std::span<double> out);
#if defined(INELLIPSE_HAVE_AVX2)
double evaluate_avx2(const PencilGrid& grid, std::span<double> out);
#endif
}  // namespace detail

}  // namespace inellipse::kernels
