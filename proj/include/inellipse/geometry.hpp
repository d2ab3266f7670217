#pragma once

#include <array>
#include <cmath>

namespace inellipse {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 p, Point2 q) { return {p.x + q.x, p.y + q.y}; }
  friend constexpr Point2 operator-(Point2 p, Point2 q) { return {p.x - q.x, p.y - q.y}; }
  friend constexpr Point2 operator*(double k, Point2 p) { return {k * p.x, k * p.y}; }
  friend constexpr bool operator==(Point2, Point2) = default;
};

constexpr double dot(Point2 p, Point2 q) { return p.x * q.x + p.y * q.y; }
constexpr double cross(Point2 p, Point2 q) { return p.x * q.y - p.y * q.x; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 p, Point2 q) { return norm(p - q); }
constexpr Point2 midpoint(Point2 p, Point2 q) { return {0.5 * (p.x + q.x), 0.5 * (p.y + q.y)}; }
inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// p -> linear * p + offset, linear stored row-major.
class AffineMap2 {
 public:
  AffineMap2() = default;
  // Throws Error(SingularMap) if the linear part is singular or non-finite.
  AffineMap2(const std::array<double, 4>& linear, Point2 offset);

  static AffineMap2 identity() { return AffineMap2{}; }
  static AffineMap2 translation(Point2 offset) { return AffineMap2{{1.0, 0.0, 0.0, 1.0}, offset}; }
  static AffineMap2 scaling(double sx, double sy) { return AffineMap2{{sx, 0.0, 0.0, sy}, {}}; }
  // Map sending (0,0) -> origin, (1,0) -> origin + e1, (0,1) -> origin + e2.
  static AffineMap2 from_frame(Point2 origin, Point2 e1, Point2 e2);

  Point2 operator()(Point2 p) const {
    return {linear_[0] * p.x + linear_[1] * p.y + offset_.x,
            linear_[2] * p.x + linear_[3] * p.y + offset_.y};
  }

  const std::array<double, 4>& linear() const { return linear_; }
  Point2 offset() const { return offset_; }
  double determinant() const { return linear_[0] * linear_[3] - linear_[1] * linear_[2]; }
  // Ratio of singular values of the linear part.
  double condition_number() const;

  AffineMap2 inverse() const;

  // (*this)(other(p)).
  AffineMap2 after(const AffineMap2& other) const;

 private:
  std::array<double, 4> linear_{1.0, 0.0, 0.0, 1.0};
  Point2 offset_{};
};

// Max absolute difference of linear parts and offsets.
double max_abs_difference(const AffineMap2& f, const AffineMap2& g);

}  // namespace inellipse
