#pragma once

#include <array>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "inellipse/geometry.hpp"
#include "inellipse/quad.hpp"
#include "inellipse/solver.hpp"

namespace inellipse::cli {

using Json = nlohmann::ordered_json;

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitIoOrParse = 1,
  kExitValidation = 2,
  kExitVerification = 3,
};

// Malformed input: bad JSON, missing fields, wrong types, unreadable files.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// {"quad": [[x,y] x4], "point": [x,y], "eps": number?}; "point" may be absent for family.
struct SolveRequest {
  std::array<Point2, 4> quad{};
  std::optional<Point2> point;
  double eps = kDefaultEps;
};

SolveRequest parse_request(const Json& doc);
SolveRequest parse_request_text(const std::string& text);
// "x1,y1,x2,y2,x3,y3,x4,y4" and "x,y".
std::array<Point2, 4> parse_quad_flag(const std::string& text);
Point2 parse_point_flag(const std::string& text);

Json error_json(std::string_view code, std::string_view message);
Json solve_response(const QueryResult& result);
Json family_response(const ConvexQuad& q, int n, double eps);

std::string render_svg(const ConvexQuad& q, Point2 p0, const QueryResult& result);

struct VerifyOptions {
  std::size_t grid_n = 100000;
  double tol = 1e-9;
  // Test hook: applied to the solver's answer before it is checked.
  std::function<void(QueryResult&)> tamper;
};

// Each command writes its JSON document (or an error document) to `out` and returns the
// exit code.
int cmd_solve(const SolveRequest& request, std::ostream& out);
int cmd_family(const SolveRequest& request, int n, std::ostream& out);
int cmd_verify(const SolveRequest& request, const VerifyOptions& options, std::ostream& out);
int cmd_svg(const SolveRequest& request, const std::filesystem::path& svg_path,
            std::ostream& out);

// Full command-line entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace inellipse::cli
