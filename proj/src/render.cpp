#include "rectpierce/render.hpp"

#include <cstdio>
#include <sstream>

namespace rectpierce {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

class Projection {
 public:
  Projection(const Instance& inst, const RenderStyle& style) : style_(style) {
    if (inst.empty()) {
      x0_ = y0_ = Scalar(0);
      extent_ = Scalar(1);
      return;
    }
    x0_ = inst[0].x_lo();
    y0_ = inst[0].y_lo();
    Scalar x1 = inst[0].x_hi(), y1 = inst[0].y_hi();
    for (const Rect& r : inst.rects()) {
      x0_ = min(x0_, r.x_lo());
      y0_ = min(y0_, r.y_lo());
      x1 = max(x1, r.x_hi());
      y1 = max(y1, r.y_hi());
    }
    extent_ = max(x1 - x0_, y1 - y0_);
  }

  double length(const Scalar& d) const { return (d / extent_).to_double() * inner(); }
  double x(const Scalar& v) const { return style_.margin + length(v - x0_); }
  // SVG y grows downward.
  double y(const Scalar& v) const { return style_.canvas - style_.margin - length(v - y0_); }

 private:
  double inner() const { return style_.canvas - 2.0 * style_.margin; }

  const RenderStyle& style_;
  Scalar x0_, y0_, extent_;
};

}  // namespace

std::string render_svg(const Instance& inst, const Overlay& overlay, const RenderStyle& style) {
  const Projection proj(inst, style);
  const auto* coloring = std::get_if<Coloring>(&overlay);
  const auto* piercing = std::get_if<PiercingResult>(&overlay);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << style.canvas
      << "\" height=\"" << style.canvas << "\" viewBox=\"0 0 " << style.canvas << ' '
      << style.canvas << "\">\n";

  for (const Rect& r : inst.rects()) {
    out << "  <rect data-id=\"" << r.id() << "\" x=\"" << fmt(proj.x(r.x_lo())) << "\" y=\""
        << fmt(proj.y(r.y_hi())) << "\" width=\"" << fmt(proj.length(r.width()))
        << "\" height=\"" << fmt(proj.length(r.height())) << "\" stroke=\"" << style.stroke
        << "\" stroke-width=\"1\"";
    if (coloring && r.id() < coloring->colors.size() && !style.palette.empty()) {
      const std::size_t c = coloring->colors[r.id()];
      out << " data-color=\"" << c << "\" fill=\"" << style.palette[c % style.palette.size()]
          << "\" fill-opacity=\"0.45\"";
    } else {
      out << " fill=\"none\"";
    }
    out << "/>\n";
  }

  if (piercing) {
    // Cell boundaries of each pivot's P-grid, drawn between facing points.
    for (const TraceStep& t : piercing->trace) {
      if (t.kind != StepKind::kEps || !t.rect || *t.rect >= inst.size()) continue;
      const std::vector<Point> grid = build_p_grid(inst[*t.rect]);
      const std::size_t half = grid.size() / 2;
      for (std::size_t j = 1; j + 1 < half; ++j) {
        out << "  <line class=\"p-grid\" x1=\"" << fmt(proj.x(grid[j].x)) << "\" y1=\""
            << fmt(proj.y(grid[j].y)) << "\" x2=\"" << fmt(proj.x(grid[half + j].x))
            << "\" y2=\"" << fmt(proj.y(grid[half + j].y)) << "\" stroke=\"" << style.stroke
            << "\" stroke-dasharray=\"2,3\"/>\n";
      }
    }
    for (const Point& p : piercing->transversal) {
      out << "  <circle cx=\"" << fmt(proj.x(p.x)) << "\" cy=\"" << fmt(proj.y(p.y))
          << "\" r=\"" << fmt(style.point_radius) << "\" fill=\"" << style.point_fill << "\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace rectpierce
