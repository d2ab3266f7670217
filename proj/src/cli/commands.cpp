#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "inellipse/cli.hpp"
#include "inellipse/error.hpp"
#include "inellipse/oracle.hpp"

namespace inellipse::cli {

namespace {

int report_error(std::ostream& out, std::string_view code, std::string_view message, int exit_code) {
  out << error_json(code, message).dump(2) << '\n';
  return exit_code;
}

template <class Fn>
int guarded(std::ostream& out, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    const int code = e.code() == ErrorCode::InternalInconsistency ? kExitVerification : kExitValidation;
    return report_error(out, error_code_name(e.code()), e.what(), code);
  } catch (const ParseError& e) {
    return report_error(out, e.code(), e.what(), kExitIoOrParse);
  }
}

ConvexQuad quad_of(const SolveRequest& request) {
  return validate_convex_quad(std::span<const Point2, 4>(request.quad), request.eps);
}

Point2 point_of(const SolveRequest& request) {
  if (!request.point) throw ParseError("parse_error", "request is missing \"point\"");
  return *request.point;
}

double distance_to_segment(Point2 p, Point2 a, Point2 b) {
  const Point2 ab = b - a;
  const double len2 = dot(ab, ab);
  const double u = len2 > 0.0 ? std::clamp(dot(p - a, ab) / len2, 0.0, 1.0) : 0.0;
  return distance(p, a + u * ab);
}

Json verify_report(const ConvexQuad& q, Point2 p0, const SolveRequest& request,
                   const VerifyOptions& options, bool& passed) {
  QueryResult result = solve_query(q, p0, SolveOptions{request.eps, std::nullopt});
  if (options.tamper) options.tamper(result);

  const bool boundary = result.region.kind == RegionKind::BoundarySide;
  const ScanOutcome scan = scan_pencil(result.canonical.shape, result.canonical.map(p0), options.grid_n);
  const int scan_count = boundary ? scan.roots() : scan.sign_changes;
  const bool counts_agree = scan_count == static_cast<int>(result.ellipses.size()) &&
                            (boundary || scan.plateaus == 0);
  passed = counts_agree;

  const DiagonalData diag = diagonal_data(q);
  Json ellipses = Json::array();
  for (const InscribedEllipse& e : result.ellipses) {
    const InscribedReport report = verify_inscribed(q, e.conic_original, options.tol);
    const double residual = std::abs(evaluate(e.conic_original, p0)) /
                            evaluation_scale(e.conic_original, p0);
    double center_offset = INFINITY;
    try {
      center_offset = distance_to_segment(center(e.conic_original), diag.mid1, diag.mid2) / q.diameter();
    } catch (const Error&) {
    }
    const bool residual_ok = residual <= (boundary ? 1e3 : 1.0) * request.eps;
    const bool newton_ok = center_offset <= options.tol;
    passed = passed && report.passed() && residual_ok && newton_ok;

    Json disc = Json::array();
    Json contact = Json::array();
    for (const SideTangency& s : report.side_tangency) {
      disc.push_back(s.discriminant_residual);
      contact.push_back(s.contact_param);
    }
    Json item;
    item["param"] = e.param.value;
    item["inscribed"] = report.passed();
    item["is_ellipse"] = report.is_ellipse;
    item["discriminant_residuals"] = std::move(disc);
    item["contact_params"] = std::move(contact);
    item["containment_violations"] = report.containment_violations;
    item["max_point_residual"] = report.max_point_residual;
    item["query_residual"] = residual;
    item["center_offset"] = center_offset;
    ellipses.push_back(std::move(item));
  }

  Json doc;
  doc["class"] = std::string(quad_class_name(result.quad_class));
  doc["case"] = std::string(query_case_name(result.query_case));
  doc["solver_count"] = result.ellipses.size();
  Json scan_json;
  scan_json["grid_n"] = options.grid_n;
  scan_json["sign_changes"] = scan.sign_changes;
  scan_json["plateaus"] = scan.plateaus;
  scan_json["count"] = scan_count;
  doc["scan"] = std::move(scan_json);
  doc["counts_agree"] = counts_agree;
  doc["ellipses"] = std::move(ellipses);
  doc["passed"] = passed;
  return doc;
}

}  // namespace

int cmd_solve(const SolveRequest& request, std::ostream& out) {
  return guarded(out, [&] {
    const ConvexQuad q = quad_of(request);
    const QueryResult result = solve_query(q, point_of(request), SolveOptions{request.eps, std::nullopt});
    out << solve_response(result).dump(2) << '\n';
    return int{kExitOk};
  });
}

int cmd_family(const SolveRequest& request, int n, std::ostream& out) {
  return guarded(out, [&] {
    const ConvexQuad q = quad_of(request);
    out << family_response(q, n, request.eps).dump(2) << '\n';
    return int{kExitOk};
  });
}

int cmd_verify(const SolveRequest& request, const VerifyOptions& options, std::ostream& out) {
  return guarded(out, [&] {
    const ConvexQuad q = quad_of(request);
    bool passed = false;
    const Json doc = verify_report(q, point_of(request), request, options, passed);
    out << doc.dump(2) << '\n';
    return passed ? int{kExitOk} : int{kExitVerification};
  });
}

int cmd_svg(const SolveRequest& request, const std::filesystem::path& svg_path, std::ostream& out) {
  return guarded(out, [&] {
    const ConvexQuad q = quad_of(request);
    const Point2 p0 = point_of(request);
    const QueryResult result = solve_query(q, p0, SolveOptions{request.eps, std::nullopt});
    std::ofstream file(svg_path, std::ios::binary);
    if (!file) throw ParseError("io_error", "cannot open " + svg_path.string() + " for writing");
    file << render_svg(q, p0, result);
    if (!file.flush()) throw ParseError("io_error", "failed writing " + svg_path.string());
    Json doc = solve_response(result);
    doc["svg"] = svg_path.string();
    out << doc.dump(2) << '\n';
    return int{kExitOk};
  });
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ellipses inscribed in a convex quadrilateral through a given point", "inellipse"};
  app.require_subcommand(1);

  std::string input;
  std::string quad_flag;
  std::string point_flag;
  std::optional<double> eps;
  std::string json_path;
  std::string svg_path;
  std::size_t grid_n = 100000;
  int family_n = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", input, "Request JSON file ('-' or omitted: standard input)");
    sub->add_option("--quad", quad_flag, "Vertices as x1,y1,x2,y2,x3,y3,x4,y4");
    sub->add_option("--point", point_flag, "Query point as x,y");
    sub->add_option("--eps", eps, "Relative tolerance (default 1e-9)");
    sub->add_option("--json", json_path, "Write the JSON result to this file instead of stdout");
  };
  CLI::App* solve = app.add_subcommand("solve", "All inscribed ellipses through the point");
  add_common(solve);
  solve->add_option("--svg", svg_path, "Also write an SVG figure");
  CLI::App* family = app.add_subcommand("family", "Equally spaced members of the inscribed pencil");
  add_common(family);
  family->add_option("--n", family_n, "Number of members")->required();
  CLI::App* verify = app.add_subcommand("verify", "Cross-check the solver against brute-force oracles");
  add_common(verify);
  verify->add_option("--grid-n", grid_n, "Parameter grid size for the scan oracle");
  CLI::App* svg = app.add_subcommand("svg", "Render the solution as SVG");
  add_common(svg);
  svg->add_option("--svg", svg_path, "Output SVG path")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return report_error(out, "usage_error", e.what(), kExitIoOrParse);
  }

  std::ostringstream buffer;
  int code = guarded(buffer, [&] {
    SolveRequest request;
    if (!quad_flag.empty()) {
      request.quad = parse_quad_flag(quad_flag);
    } else {
      std::string text;
      if (input.empty() || input == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
      } else {
        std::ifstream file(input, std::ios::binary);
        if (!file) throw ParseError("io_error", "cannot read " + input);
        text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
      }
      request = parse_request_text(text);
    }
    if (!point_flag.empty()) request.point = parse_point_flag(point_flag);
    if (eps) {
      if (!(*eps > 0.0)) throw ParseError("parse_error", "--eps must be positive");
      request.eps = *eps;
    }

    if (solve->parsed()) {
      return svg_path.empty() ? cmd_solve(request, buffer) : cmd_svg(request, svg_path, buffer);
    }
    if (family->parsed()) return cmd_family(request, family_n, buffer);
    if (verify->parsed()) return cmd_verify(request, VerifyOptions{grid_n, 1e-9, {}}, buffer);
    return cmd_svg(request, svg_path, buffer);
  });

  if (!json_path.empty()) {
    std::ofstream file(json_path, std::ios::binary);
    if (!file || !(file << buffer.str()) || !file.flush()) {
      return report_error(out, "io_error", "cannot write " + json_path, kExitIoOrParse);
    }
    return code;
  }
  out << buffer.str();
  return code;
}

}  // namespace inellipse::cli
