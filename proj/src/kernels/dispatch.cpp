#include <cstdlib>
#include <string>
#include <string_view>

#include "inellipse/error.hpp"
#include "inellipse/kernels/pencil_scan.hpp"

namespace inellipse::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(INELLIPSE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend resolve_best() {
  // INELLIPSE_SIMD=scalar pins the reference kernel, e.g. for timing comparisons.
  if (const char* env = std::getenv("INELLIPSE_SIMD"); env && std::string_view(env) == "scalar") {
    return Backend::Scalar;
  }
  return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

}  // namespace

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
  }
  return "unknown";
}

bool backend_available(Backend backend) {
  switch (backend) {
    case Backend::Scalar: return true;
    case Backend::Avx2: {
      static const bool available = cpu_has_avx2();
      return available;
    }
  }
  return false;
}

Backend best_backend() {
  static const Backend best = resolve_best();
  return best;
}

double evaluate_pencil_grid(const PencilGrid& grid, std::span<double> out, Backend backend) {
  if (!backend_available(backend)) {
    throw Error(ErrorCode::InvalidArgument,
                "scan backend " + std::string(backend_name(backend)) + " is unavailable");
  }
  switch (backend) {
    case Backend::Scalar: return detail::evaluate_scalar(grid, out);
    case Backend::Avx2:
#if defined(INELLIPSE_HAVE_AVX2)
      return detail::evaluate_avx2(grid, out);
#else
      break;
#endif
  }
  return detail::evaluate_scalar(grid, out);
}

double evaluate_pencil_grid(const PencilGrid& grid, std::span<double> out) {
  return evaluate_pencil_grid(grid, out, best_backend());
}

}  // namespace inellipse::kernels
