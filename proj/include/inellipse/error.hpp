#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace inellipse {

enum class ErrorCode {
  InvalidArgument,
  DuplicateVertex,
  CollinearVertices,
  NonConvex,
  SelfIntersectingOrder,
  SingularMap,
  NotAnEllipse,
  ClassificationFailed,
  ParamOutOfInterval,
  PointOutsideQuad,
  ExteriorPoint,
  VertexPoint,
  InternalInconsistency,
};

// Stable snake_case identifier used in machine-readable error output.
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace inellipse
