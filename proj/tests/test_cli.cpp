#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "inellipse/cli.hpp"
#include "inellipse/error.hpp"

using namespace inellipse;
using namespace inellipse::cli;

namespace {

const char* kSlantedRequest = R"({"quad": [[0,0],[1,0],[0.5,0.75],[0,1]], "point": [0.3333333333333333, 0.75]})";
const char* kWideRequest = R"({"quad": [[0,0],[1,0],[4,2],[0,1]], "point": [0.5, 0.25]})";
const char* kTrapezoid = R"({"quad": [[-1,2],[3,4],[9,2],[3,-1]], "point": [4, 2]})";
const char* kIntersection = R"({"quad": [[0,0],[1,0],[4,2],[0,1]], "point": [0.6666666666666666, 0.3333333333333333]})";

struct Outcome {
  int code;
  Json doc;
  std::string text;
};

Outcome run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  Json doc;
  try {
    doc = Json::parse(out.str());
  } catch (const std::exception&) {
  }
  return {code, doc, out.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("inellipse_test_" + name);
}

int count_occurrences(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

double conic_distance_json(const Json& coeffs, const Conic& expected) {
  Conic k{coeffs[0], coeffs[1], coeffs[2], coeffs[3], coeffs[4], coeffs[5]};
  return conic_distance(k, expected);
}

}  // namespace

TEST(Cli, SolveSlantedQuad) {
  const Outcome o = run_cli({"solve", "-"}, kSlantedRequest);
  ASSERT_EQ(o.code, kExitOk) << o.text;
  EXPECT_EQ(o.doc["case"], "two_ellipses");
  EXPECT_EQ(o.doc["class"], "general_position");
  ASSERT_EQ(o.doc["ellipses"].size(), 2u);
  EXPECT_NEAR(o.doc["ellipses"][0]["param"].get<double>(), 0.274306, 1e-6);
  EXPECT_NEAR(o.doc["ellipses"][1]["param"].get<double>(), 0.488580, 1e-6);
}

TEST(Cli, SolveTrapezoidViaFlags) {
  const Outcome o = run_cli({"solve", "--quad", "-1,2,3,4,9,2,3,-1", "--point", "4,2"});
  ASSERT_EQ(o.code, kExitOk) << o.text;
  ASSERT_EQ(o.doc["ellipses"].size(), 1u);
  EXPECT_LT(conic_distance_json(o.doc["ellipses"][0]["coefficients"],
                                Conic{3744, 601, 12, -22800, -1900, 32500}),
            1e-9);
}

TEST(Cli, SolveDiagonalIntersection) {
  const Outcome o = run_cli({"solve"}, kIntersection);
  ASSERT_EQ(o.code, kExitOk) << o.text;
  EXPECT_EQ(o.doc["case"], "none_at_diagonal_intersection");
  EXPECT_TRUE(o.doc["ellipses"].empty());
}

TEST(Cli, FamilySpacing) {
  const Outcome sq = run_cli({"family", "--quad", "0,0,1,0,1,1,0,1", "--n", "1"});
  ASSERT_EQ(sq.code, kExitOk) << sq.text;
  ASSERT_EQ(sq.doc.size(), 1u);
  EXPECT_DOUBLE_EQ(sq.doc[0]["param"].get<double>(), 0.5);
  EXPECT_LT(conic_distance_json(sq.doc[0]["coefficients"], Conic{1, 1, 0, -1, -1, 0.25}), 1e-15);

  const Outcome g = run_cli({"family", "--quad", "0,0,1,0,4,2,0,1", "--n", "3"});
  ASSERT_EQ(g.code, kExitOk) << g.text;
  ASSERT_EQ(g.doc.size(), 3u);
  const double expected[] = {7.0 / 8, 5.0 / 4, 13.0 / 8};
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(g.doc[i]["param"].get<double>(), expected[i], 1e-15);

  const Outcome bad = run_cli({"family", "--quad", "0,0,1,0,4,2,0,1", "--n", "0"});
  EXPECT_EQ(bad.code, kExitValidation);
  EXPECT_EQ(bad.doc["error"]["code"], "invalid_argument");
}

TEST(Cli, VerifyPassesOnReferenceQueries) {
  for (const char* req : {kSlantedRequest, kWideRequest, kTrapezoid, kIntersection}) {
    const Outcome o = run_cli({"verify"}, req);
    EXPECT_EQ(o.code, kExitOk) << o.text;
    EXPECT_TRUE(o.doc["passed"].get<bool>());
  }
  const Outcome b = run_cli({"verify", "--quad", "0,0,1,0,4,2,0,1", "--point", "0.5,0"});
  EXPECT_EQ(b.code, kExitOk) << b.text;
}

TEST(Cli, VerifyCatchesCorruptedAnswer) {
  VerifyOptions options;
  options.tamper = [](QueryResult& r) { r.ellipses[0].conic_original.d += 1e-3; };
  std::ostringstream out;
  EXPECT_EQ(cmd_verify(parse_request_text(kSlantedRequest), options, out), kExitVerification);
  EXPECT_FALSE(Json::parse(out.str())["passed"].get<bool>());

  VerifyOptions dropped;
  dropped.tamper = [](QueryResult& r) { r.ellipses.pop_back(); };
  std::ostringstream out2;
  EXPECT_EQ(cmd_verify(parse_request_text(kSlantedRequest), dropped, out2), kExitVerification);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"solve"}, "{not json").code, kExitIoOrParse);
  EXPECT_EQ(run_cli({"solve"}, R"({"quad": [[0,0],[1,0]], "point": [0,0]})").code, kExitIoOrParse);
  EXPECT_EQ(run_cli({"solve", "/nonexistent/request.json"}).code, kExitIoOrParse);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitIoOrParse);

  const Outcome nonconvex = run_cli({"solve", "--quad", "0,0,2,0,1,0.5,0,2", "--point", "0.2,0.2"});
  EXPECT_EQ(nonconvex.code, kExitValidation);
  EXPECT_EQ(nonconvex.doc["error"]["code"], "non_convex");
  const Outcome outside = run_cli({"solve", "--quad", "0,0,1,0,1,1,0,1", "--point", "2,2"});
  EXPECT_EQ(outside.code, kExitValidation);
  EXPECT_EQ(outside.doc["error"]["code"], "exterior_point");
  const Outcome vertex = run_cli({"solve", "--quad", "0,0,1,0,1,1,0,1", "--point", "1,1"});
  EXPECT_EQ(vertex.code, kExitValidation);
  EXPECT_EQ(vertex.doc["error"]["code"], "vertex_point");
}

TEST(Cli, JsonRoundTripIsByteIdentical) {
  for (const char* req : {kSlantedRequest, kWideRequest, kTrapezoid}) {
    const Outcome o = run_cli({"solve"}, req);
    ASSERT_EQ(o.code, kExitOk);
    const std::string once = o.doc.dump(2);
    EXPECT_EQ(Json::parse(once).dump(2), once);
    EXPECT_EQ(once + "\n", o.text);
  }
}

TEST(Cli, JsonOutputFile) {
  const auto path = temp_path("out.json");
  const Outcome o = run_cli({"solve", "--json", path.string()}, kWideRequest);
  ASSERT_EQ(o.code, kExitOk);
  EXPECT_TRUE(o.text.empty());
  std::ifstream file(path);
  const Json doc = Json::parse(file);
  EXPECT_EQ(doc["case"], "one_ellipse_on_diagonal");
  std::filesystem::remove(path);
}

TEST(Cli, SvgEllipseCounts) {
  struct Case {
    const char* request;
    int ellipses;
  };
  const Case cases[] = {
      {kSlantedRequest, 2},
      {kIntersection, 0},
      {R"({"quad": [[0,0],[1,0],[4,2],[0,1]], "point": [0.5, 0]})", 1},
  };
  int i = 0;
  for (const Case& c : cases) {
    const auto path = temp_path("fig" + std::to_string(i++) + ".svg");
    const Outcome o = run_cli({"svg", "--svg", path.string()}, c.request);
    ASSERT_EQ(o.code, kExitOk) << o.text;
    EXPECT_EQ(o.doc["svg"], path.string());
    std::ifstream file(path);
    const std::string svg((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
    EXPECT_EQ(count_occurrences(svg, "<ellipse"), c.ellipses);
    EXPECT_EQ(count_occurrences(svg, "class=\"query\""), 1);
    std::filesystem::remove(path);
  }
}

TEST(Cli, SvgBoundaryEllipseTouchesPoint) {
  const SolveRequest req = parse_request_text(R"({"quad": [[0,0],[1,0],[4,2],[0,1]], "point": [0.5, 0]})");
  const ConvexQuad q = validate_convex_quad(req.quad[0], req.quad[1], req.quad[2], req.quad[3]);
  const QueryResult r = solve_query(q, *req.point);
  ASSERT_EQ(r.ellipses.size(), 1u);
  const EllipseParams g = geometric_params(r.ellipses[0].conic_original);
  double best = INFINITY;
  for (int k = 0; k < 20000; ++k) best = std::min(best, distance(g.point_at(2 * 3.141592653589793 * k / 20000), *req.point));
  EXPECT_LT(best, 1e-3);
}

TEST(Cli, ParseFlags) {
  const auto quad = parse_quad_flag("0,0,1,0,1,1,0,1");
  EXPECT_EQ(quad[2].x, 1.0);
  EXPECT_THROW(parse_quad_flag("0,0,1"), ParseError);
  EXPECT_THROW(parse_point_flag("a,b"), ParseError);
  const SolveRequest r = parse_request_text(R"({"quad": [[0,0],[1,0],[1,1],[0,1]], "point": [0.2,0.3], "eps": 1e-7})");
  EXPECT_EQ(r.eps, 1e-7);
}
