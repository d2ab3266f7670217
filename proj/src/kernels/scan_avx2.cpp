// Compiled with -mavx2 -mfma; only called after a runtime CPU check.
#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "inellipse/kernels/pencil_scan.hpp"

namespace inellipse::kernels::detail {

namespace {

inline __m256d splat(double v) { return _mm256_set1_pd(v); }

inline __m256d abs_pd(__m256d v) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v); }

inline double hmax(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d m = _mm_max_pd(lo, hi);
  return std::max(_mm_cvtsd_f64(m), _mm_cvtsd_f64(_mm_unpackhi_pd(m, m)));
}

struct GeneralLanes {
  __m256d s, x, y, s_minus_t, s_minus_t_plus_2, sm1, tm1_2, slope, offset, k4, minus4sm1;

  explicit GeneralLanes(const PencilGrid& g) {
    const double sm1_s = g.s - 1.0;
    const double tm1_s = g.t - 1.0;
    const double inv = 1.0 / (2.0 * sm1_s);
    s = splat(g.s);
    x = splat(g.x);
    y = splat(g.y);
    s_minus_t = splat(g.s - g.t);
    s_minus_t_plus_2 = splat(g.s - g.t + 2.0);
    sm1 = splat(sm1_s);
    tm1_2 = splat(2.0 * tm1_s);
    slope = splat(2.0 * tm1_s * inv);
    k4 = splat(4.0 * sm1_s * sm1_s);
    minus4sm1 = splat(-4.0 * sm1_s);
    offset = splat((g.s - g.t) * inv);
  }

  __m256d operator()(__m256d tau) const {
    const __m256d one = splat(1.0);
    const __m256d two = splat(2.0);
    const __m256d L = _mm256_fmadd_pd(tau, slope, offset);
    const __m256d dx = _mm256_sub_pd(x, tau);
    const __m256d dy = _mm256_sub_pd(y, L);
    const __m256d inner = _mm256_fmsub_pd(_mm256_fmadd_pd(tm1_2, tau, s_minus_t_plus_2), tau, s);
    const __m256d cross_coef = _mm256_mul_pd(minus4sm1, inner);
    const __m256d two_tau = _mm256_mul_pd(two, tau);
    const __m256d rhs = _mm256_mul_pd(_mm256_mul_pd(_mm256_sub_pd(two_tau, one),
                                                    _mm256_fmadd_pd(tm1_2, tau, s)),
                                      _mm256_sub_pd(s, two_tau));
    const __m256d a = _mm256_mul_pd(_mm256_mul_pd(k4, L), L);
    const __m256d b = _mm256_mul_pd(_mm256_mul_pd(k4, tau), tau);
    __m256d acc = _mm256_mul_pd(_mm256_mul_pd(a, dx), dx);
    acc = _mm256_fmadd_pd(_mm256_mul_pd(b, dy), dy, acc);
    acc = _mm256_fmadd_pd(_mm256_mul_pd(cross_coef, dx), dy, acc);
    return _mm256_sub_pd(acc, rhs);
  }
};

struct TrapezoidLanes {
  __m256d t, x, y, tm1, one_minus_t, tm1sq_4xx, tm1sq_yy, xy4, x4tm1, y2tm1;

  explicit TrapezoidLanes(const PencilGrid& g) {
    const double tm1_s = g.t - 1.0;
    t = splat(g.t);
    x = splat(g.x);
    y = splat(g.y);
    tm1 = splat(tm1_s);
    one_minus_t = splat(1.0 - g.t);
    tm1sq_4xx = splat(4.0 * tm1_s * tm1_s * g.x * g.x);
    tm1sq_yy = splat(tm1_s * tm1_s * g.y * g.y);
    xy4 = splat(4.0 * (1.0 - g.t) * g.x * g.y);
    x4tm1 = splat(4.0 * tm1_s * g.x);
    y2tm1 = splat(2.0 * tm1_s * g.y);
  }

  __m256d operator()(__m256d k) const {
    const __m256d w = _mm256_fmsub_pd(splat(2.0), k, t);
    // (t + 1)·k - t
    const __m256d lin = _mm256_fmsub_pd(_mm256_add_pd(t, splat(1.0)), k, t);
    __m256d acc = _mm256_mul_pd(_mm256_mul_pd(tm1sq_4xx, k), k);
    acc = _mm256_add_pd(acc, tm1sq_yy);
    acc = _mm256_fmadd_pd(xy4, lin, acc);
    acc = _mm256_fmadd_pd(_mm256_mul_pd(x4tm1, k), w, acc);
    acc = _mm256_fmadd_pd(y2tm1, w, acc);
    return _mm256_fmadd_pd(w, w, acc);
  }
};

struct SquareLanes {
  __m256d base, slope;

  explicit SquareLanes(const PencilGrid& g) {
    base = splat(g.x * g.x + g.y * g.y - 2.0 * g.x * g.y);
    slope = splat(4.0 * g.x * g.y - 2.0 * g.x - 2.0 * g.y);
  }

  __m256d operator()(__m256d v) const {
    return _mm256_fmadd_pd(v, v, _mm256_fmadd_pd(slope, v, base));
  }
};

template <class Lanes>
double run(const PencilGrid& grid, std::span<double> out) {
  const Lanes lanes(grid);
  const std::size_t n = out.size();
  const double step = (grid.hi - grid.lo) / static_cast<double>(n + 1);
  const __m256d lo = splat(grid.lo);
  const __m256d step_v = splat(step);
  __m256d index = _mm256_set_pd(4.0, 3.0, 2.0, 1.0);
  const __m256d four = splat(4.0);
  __m256d max_abs = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d tau = _mm256_fmadd_pd(index, step_v, lo);
    const __m256d v = lanes(tau);
    _mm256_storeu_pd(out.data() + i, v);
    max_abs = _mm256_max_pd(max_abs, abs_pd(v));
    index = _mm256_add_pd(index, four);
  }
  double result = hmax(max_abs);
  for (; i < n; ++i) {
    const double tau = grid.lo + static_cast<double>(i + 1) * step;
    out[i] = pencil_equation_value(grid.kind, grid.s, grid.t, grid.x, grid.y, tau);
    result = std::max(result, std::abs(out[i]));
  }
  return result;
}

}  // namespace

double evaluate_avx2(const PencilGrid& grid, std::span<double> out) {
  switch (grid.kind) {
    case ShapeKind::General: return run<GeneralLanes>(grid, out);
    case ShapeKind::Trapezoid: return run<TrapezoidLanes>(grid, out);
    case ShapeKind::Square: return run<SquareLanes>(grid, out);
  }
  return 0.0;
}

}  // namespace inellipse::kernels::detail
