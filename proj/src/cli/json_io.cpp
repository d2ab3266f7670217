#include <cmath>
#include <sstream>

#include "inellipse/canonical.hpp"
#include "inellipse/cli.hpp"
#include "inellipse/error.hpp"
#include "inellipse/oracle.hpp"
#include "inellipse/pencil.hpp"

namespace inellipse::cli {

namespace {

double number_at(const Json& node, const std::string& where) {
  if (!node.is_number()) throw ParseError("parse_error", where + " must be a number");
  const double v = node.get<double>();
  if (!std::isfinite(v)) throw ParseError("parse_error", where + " must be finite");
  return v;
}

Point2 point_at(const Json& node, const std::string& where) {
  if (!node.is_array() || node.size() != 2) {
    throw ParseError("parse_error", where + " must be an [x, y] pair");
  }
  return {number_at(node[0], where + "[0]"), number_at(node[1], where + "[1]")};
}

Json pair(Point2 p) { return Json::array({p.x, p.y}); }

Json coefficients(const Conic& k) { return Json::array({k.a, k.b, k.c, k.d, k.e, k.f}); }

Json tangent_list(const TangentPoints& tp) {
  Json out = Json::array();
  for (const Point2& z : tp.zeta) out.push_back(pair(z));
  return out;
}

std::vector<double> split_numbers(const std::string& text, std::size_t expected,
                                  const std::string& flag) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      if (item.find_first_not_of(" \t", used) != std::string::npos || !std::isfinite(v)) {
        throw std::invalid_argument(item);
      }
      values.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("parse_error", flag + ": '" + item + "' is not a number");
    }
  }
  if (values.size() != expected) {
    throw ParseError("parse_error",
                     flag + " expects " + std::to_string(expected) + " comma-separated numbers");
  }
  return values;
}

}  // namespace

SolveRequest parse_request(const Json& doc) {
  if (!doc.is_object()) throw ParseError("parse_error", "request must be a JSON object");
  SolveRequest request;
  if (!doc.contains("quad")) throw ParseError("parse_error", "request is missing \"quad\"");
  const Json& quad = doc["quad"];
  if (!quad.is_array() || quad.size() != 4) {
    throw ParseError("parse_error", "\"quad\" must list four [x, y] vertices");
  }
  for (std::size_t i = 0; i < 4; ++i) {
    request.quad[i] = point_at(quad[i], "quad[" + std::to_string(i) + "]");
  }
  if (doc.contains("point")) request.point = point_at(doc["point"], "point");
  if (doc.contains("eps")) {
    request.eps = number_at(doc["eps"], "eps");
    if (!(request.eps > 0.0)) throw ParseError("parse_error", "eps must be positive");
  }
  return request;
}

SolveRequest parse_request_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("parse_error", e.what());
  }
  return parse_request(doc);
}

std::array<Point2, 4> parse_quad_flag(const std::string& text) {
  const auto v = split_numbers(text, 8, "--quad");
  return {Point2{v[0], v[1]}, Point2{v[2], v[3]}, Point2{v[4], v[5]}, Point2{v[6], v[7]}};
}

Point2 parse_point_flag(const std::string& text) {
  const auto v = split_numbers(text, 2, "--point");
  return {v[0], v[1]};
}

Json error_json(std::string_view code, std::string_view message) {
  Json err;
  err["code"] = std::string(code);
  err["message"] = std::string(message);
  Json doc;
  doc["error"] = std::move(err);
  return doc;
}

Json solve_response(const QueryResult& result) {
  Json doc;
  doc["class"] = std::string(quad_class_name(result.quad_class));
  doc["case"] = std::string(query_case_name(result.query_case));
  Json ellipses = Json::array();
  for (const InscribedEllipse& e : result.ellipses) {
    Json item;
    item["coefficients"] = coefficients(e.conic_original);
    item["param"] = e.param.value;
    item["center"] = pair(result.canonical.inverse(pencil_center(result.canonical.shape, e.param.value)));
    item["tangent_points"] = tangent_list(e.tangent_points_original);
    item["tangent_at_query"] = e.tangent_at_query;
    ellipses.push_back(std::move(item));
  }
  doc["ellipses"] = std::move(ellipses);
  return doc;
}

Json family_response(const ConvexQuad& q, int n, double eps) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "family size must be at least 1");
  const CanonicalForm cf = canonical_map(q, eps);
  const ParamInterval interval = param_interval(cf);
  Json members = Json::array();
  const auto count = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < count; ++i) {
    const double value = interval.node(i, count);
    const InscribedEllipse e = make_inscribed_ellipse(cf, value);
    if (!verify_inscribed(q, e.conic_original).passed()) {
      throw Error(ErrorCode::InternalInconsistency,
                  "pencil member " + std::to_string(value) + " failed the inscribed check");
    }
    Json item;
    item["param"] = value;
    item["coefficients"] = coefficients(e.conic_original);
    item["center"] = pair(cf.inverse(pencil_center(cf.shape, value)));
    item["tangent_points"] = tangent_list(e.tangent_points_original);
    members.push_back(std::move(item));
  }
  return members;
}

}  // namespace inellipse::cli
