#pragma once

#include <string_view>

namespace inellipse {

// Canonical shape families: vertices (0,0),(1,0),(s,t),(0,1); (0,0),(1,0),(1,t),(0,1);
// and the unit square.
enum class ShapeKind { General, Trapezoid, Square };

constexpr std::string_view shape_kind_name(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::General: return "general";
    case ShapeKind::Trapezoid: return "trapezoid";
    case ShapeKind::Square: return "square";
  }
  return "unknown";
}

}  // namespace inellipse
