#include "chronofold/layers/svg.hpp"

#include <cstdio>
#include <sstream>

namespace chronofold {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Frame {
  const Axes& axes;
  double left, top, width, height;

  double px(double x) const { return left + (x - axes.xmin) / (axes.xmax - axes.xmin) * width; }
  double py(double y) const {
    return top + height - (y - axes.ymin) / (axes.ymax - axes.ymin) * height;
  }
};

void polygon(std::ostringstream& out, const Frame& f, const AreaPolygon& poly,
             const std::string& fill, double opacity) {
  out << "<polygon points=\"";
  for (std::size_t k = 0; k < poly.vertices.size(); ++k) {
    if (k) out << ' ';
    out << num(f.px(poly.vertices[k].x)) << ',' << num(f.py(poly.vertices[k].y));
  }
  out << "\" fill=\"" << fill << "\" fill-opacity=\"" << num(opacity) << "\"/>\n";
}

void segment(std::ostringstream& out, const Frame& f, const Segment& seg,
             const std::string& stroke, double width) {
  for (const auto& piece : seg.pieces) {
    out << "<line x1=\"" << num(f.px(piece.from.x)) << "\" y1=\"" << num(f.py(piece.from.y))
        << "\" x2=\"" << num(f.px(piece.to.x)) << "\" y2=\"" << num(f.py(piece.to.y))
        << "\" stroke=\"" << stroke << "\" stroke-width=\"" << num(width) << "\"/>\n";
  }
}

}  // namespace

std::string render_svg(const LayerSet& layers, const SvgOptions& options) {
  const double m = options.margin;
  const Frame f{layers.axes, m, m, options.width - 2 * m, options.height - 2 * m};
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width
      << "\" height=\"" << options.height << "\" viewBox=\"0 0 " << options.width << ' '
      << options.height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  if (!options.title.empty()) {
    out << "<text x=\"" << num(m) << "\" y=\"" << num(m / 2) << "\" font-size=\"12\">"
        << escape(options.title) << "</text>\n";
  }

  out << "<g class=\"grid\" stroke=\"#e5e5e5\" stroke-width=\"1\">\n";
  for (double t : layers.axes.xticks) {
    out << "<line x1=\"" << num(f.px(t)) << "\" y1=\"" << num(f.top) << "\" x2=\""
        << num(f.px(t)) << "\" y2=\"" << num(f.top + f.height) << "\"/>\n";
  }
  for (double t : layers.axes.yticks) {
    out << "<line x1=\"" << num(f.left) << "\" y1=\"" << num(f.py(t)) << "\" x2=\""
        << num(f.left + f.width) << "\" y2=\"" << num(f.py(t)) << "\"/>\n";
  }
  out << "</g>\n";

  out << "<g class=\"axes\" font-size=\"10\" fill=\"#333333\">\n";
  out << "<rect x=\"" << num(f.left) << "\" y=\"" << num(f.top) << "\" width=\""
      << num(f.width) << "\" height=\"" << num(f.height)
      << "\" fill=\"none\" stroke=\"#333333\"/>\n";
  for (double t : layers.axes.xticks) {
    out << "<text x=\"" << num(f.px(t)) << "\" y=\"" << num(f.top + f.height + 14)
        << "\" text-anchor=\"middle\">" << tick_label(t) << "</text>\n";
  }
  for (double t : layers.axes.yticks) {
    out << "<text x=\"" << num(f.left - 4) << "\" y=\"" << num(f.py(t) + 3)
        << "\" text-anchor=\"end\">" << tick_label(t) << "</text>\n";
  }
  out << "</g>\n";

  out << "<g class=\"base\">\n";
  for (const auto& poly : layers.areas) polygon(out, f, poly, poly.color, 0.6);
  for (const auto& seg : layers.lines) segment(out, f, seg, seg.color, 1.0);
  for (std::size_t k = 0; k < layers.points.ids.size(); ++k) {
    out << "<circle cx=\"" << num(f.px(layers.points.positions[k].x)) << "\" cy=\""
        << num(f.py(layers.points.positions[k].y)) << "\" r=\""
        << num(1.5 * layers.points.sizes[k]) << "\" fill=\"" << layers.points.colors[k]
        << "\"/>\n";
  }
  for (const auto& stat : layers.stats) {
    out << "<line x1=\"" << num(f.px(stat.xmin)) << "\" y1=\"" << num(f.py(stat.y))
        << "\" x2=\"" << num(f.px(stat.xmax)) << "\" y2=\"" << num(f.py(stat.y))
        << "\" stroke=\"#444444\" stroke-dasharray=\"4 2\"/>\n";
  }
  out << "</g>\n";

  out << "<g class=\"brush\">\n";
  for (std::size_t k : layers.brush.polygons) {
    polygon(out, f, layers.areas[k], options.brush_color, 0.9);
  }
  for (std::size_t s : layers.brush.segments) {
    segment(out, f, layers.lines[s], options.brush_color, 2.0);
  }
  for (std::size_t i : layers.brush.points) {
    for (std::size_t k = 0; k < layers.points.ids.size(); ++k) {
      if (layers.points.ids[k] != i) continue;
      out << "<circle cx=\"" << num(f.px(layers.points.positions[k].x)) << "\" cy=\""
          << num(f.py(layers.points.positions[k].y)) << "\" r=\""
          << num(2.5 * layers.points.sizes[k]) << "\" fill=\"" << options.brush_color
          << "\"/>\n";
    }
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace chronofold
