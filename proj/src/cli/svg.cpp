#include <algorithm>
#include <iomanip>
#include <locale>
#include <numbers>
#include <sstream>

#include "inellipse/cli.hpp"

namespace inellipse::cli {

namespace {

class SvgWriter {
 public:
  SvgWriter() {
    out_.imbue(std::locale::classic());
    out_ << std::setprecision(10);
  }

  std::ostringstream& stream() { return out_; }
  SvgWriter& num(double v) {
    out_ << (v == 0.0 ? 0.0 : v);  // no "-0"
    return *this;
  }
  SvgWriter& text(std::string_view s) {
    out_ << s;
    return *this;
  }

 private:
  std::ostringstream out_;
};

}  // namespace

std::string render_svg(const ConvexQuad& q, Point2 p0, const QueryResult& result) {
  const auto& v = q.vertices();
  double min_x = v[0].x, max_x = v[0].x, min_y = v[0].y, max_y = v[0].y;
  for (const Point2& p : v) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double width = max_x - min_x;
  const double height = max_y - min_y;
  const double mx = 0.05 * width;
  const double my = 0.05 * height;
  const double stroke = 0.004 * std::max(width, height);
  const DiagonalData diag = diagonal_data(q);

  SvgWriter w;
  w.text("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
  w.text("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"")
      .num(min_x - mx).text(" ").num(min_y - my).text(" ")
      .num(width + 2 * mx).text(" ").num(height + 2 * my).text("\">\n");
  // Flip y about the bounding box so the figure reads with y pointing up.
  w.text("<g transform=\"matrix(1 0 0 -1 0 ").num(min_y + max_y).text(")\" fill=\"none\" stroke-width=\"")
      .num(stroke).text("\">\n");

  w.text("<polygon stroke=\"black\" points=\"");
  for (std::size_t i = 0; i < 4; ++i) {
    w.num(v[i].x).text(",").num(v[i].y).text(i < 3 ? " " : "");
  }
  w.text("\"/>\n");

  auto line = [&](Point2 a, Point2 b, std::string_view cls, std::string_view color) {
    w.text("<line class=\"").text(cls).text("\" stroke=\"").text(color).text("\" x1=\"").num(a.x)
        .text("\" y1=\"").num(a.y).text("\" x2=\"").num(b.x).text("\" y2=\"").num(b.y)
        .text("\"/>\n");
  };
  line(v[0], v[2], "diagonal", "gray");
  line(v[1], v[3], "diagonal", "gray");
  line(diag.mid1, diag.mid2, "newton", "green");

  for (const InscribedEllipse& e : result.ellipses) {
    const EllipseParams g = geometric_params(e.conic_original);
    w.text("<ellipse stroke=\"blue\" cx=\"").num(g.center.x).text("\" cy=\"").num(g.center.y)
        .text("\" rx=\"").num(g.semi_major).text("\" ry=\"").num(g.semi_minor)
        .text("\" transform=\"rotate(").num(g.rotation * 180.0 / std::numbers::pi).text(" ")
        .num(g.center.x).text(" ").num(g.center.y).text(")\"/>\n");
  }

  w.text("<circle class=\"query\" fill=\"red\" stroke=\"none\" cx=\"").num(p0.x).text("\" cy=\"")
      .num(p0.y).text("\" r=\"").num(2.5 * stroke).text("\"/>\n");
  w.text("</g>\n</svg>\n");
  return w.stream().str();
}

}  // namespace inellipse::cli
