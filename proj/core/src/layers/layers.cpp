#include "chronofold/layers/layers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "chronofold/algebra/ywrap.hpp"
#include "chronofold/model/errors.hpp"

namespace chronofold {

std::string_view to_string(RenderMode mode) {
  return mode == RenderMode::line ? "line" : "area";
}

namespace {

double lerp(double a, double b, double t) { return a + (b - a) * t; }

// Facet panels share an offset; rounding keeps float noise from splitting one.
long long panel_key(double offset) { return std::llround(offset * 1e9); }

std::vector<SegmentPiece> pieces_for(const CoordinateState& state, std::size_t a,
                                     std::size_t b) {
  const Vec2 pa{state.x[a], state.y[a]};
  const Vec2 pb{state.x[b], state.y[b]};
  if (!state.y_band) return {{pa, pb}};
  const auto& band = *state.y_band;
  const double off_a = state.y[a] - state.y0[a];
  const double off_b = state.y[b] - state.y0[b];
  std::vector<SegmentPiece> out;
  for (const auto& piece : y_pieces(band.unwrapped[a], band.unwrapped[b], band.height)) {
    out.push_back({{lerp(pa.x, pb.x, piece.t0), piece.y0 + lerp(off_a, off_b, piece.t0)},
                   {lerp(pa.x, pb.x, piece.t1), piece.y1 + lerp(off_a, off_b, piece.t1)}});
  }
  return out;
}

}  // namespace

std::vector<Segment> build_segments(const CoordinateState& state,
                                    std::span<const PointAttributes> attrs) {
  if (attrs.size() != state.size()) {
    throw Error("layers: attribute count does not match point count");
  }
  std::vector<Segment> segments;
  for (auto [a, b] : segment_pairs(state)) {
    Segment seg;
    seg.from = a;
    seg.to = b;
    seg.line = state.groups.line[a];
    seg.color = attrs[a].color;
    seg.pieces = pieces_for(state, a, b);
    segments.push_back(std::move(seg));
  }
  return segments;
}

std::vector<AreaPolygon> build_polygons(const CoordinateState& state,
                                        std::span<const Segment> segments) {
  std::map<long long, double> floor;
  if (!state.y_band) {
    for (std::size_t i = 0; i < state.size(); ++i) {
      const auto key = panel_key(state.facet_offset[i]);
      auto [it, inserted] = floor.emplace(key, state.y[i]);
      if (!inserted) it->second = std::min(it->second, state.y[i]);
    }
  }
  std::vector<AreaPolygon> polygons;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    const auto& seg = segments[s];
    const double off_a = state.y[seg.from] - state.y0[seg.from];
    const double off_b = state.y[seg.to] - state.y0[seg.to];
    for (const auto& piece : seg.pieces) {
      double base_from = 0.0;
      double base_to = 0.0;
      if (state.y_band) {
        const double dx = state.x[seg.to] - state.x[seg.from];
        const auto t_at = [&](double x) { return dx == 0.0 ? 0.0 : (x - state.x[seg.from]) / dx; };
        base_from = lerp(off_a, off_b, t_at(piece.from.x));
        base_to = lerp(off_a, off_b, t_at(piece.to.x));
      } else {
        base_from = floor.at(panel_key(state.facet_offset[seg.from]));
        base_to = base_from;
      }
      AreaPolygon poly;
      poly.vertices = {piece.from, piece.to, Vec2{piece.to.x, base_to},
                       Vec2{piece.from.x, base_from}};
      poly.color = seg.color;
      poly.source_point = seg.from;
      poly.segment = s;
      polygons.push_back(std::move(poly));
    }
  }
  return polygons;
}

std::vector<double> nice_ticks(double lo, double hi, int target) {
  if (!(hi > lo) || target < 1) return {lo};
  const double raw = (hi - lo) / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    step = m * mag;
    if (step >= raw) break;
  }
  std::vector<double> ticks;
  for (double v = std::ceil(lo / step) * step; v <= hi + step * 1e-9; v += step) {
    ticks.push_back(std::abs(v) < step * 1e-9 ? 0.0 : v);
  }
  return ticks;
}

namespace {

Axes compute_axes(const CoordinateState& state, const LayerSet& layers) {
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -xmin;
  double ymin = xmin;
  double ymax = -xmin;
  const auto take = [&](const Vec2& p) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  };
  for (const auto& p : layers.points.positions) take(p);
  for (const auto& seg : layers.lines) {
    for (const auto& piece : seg.pieces) {
      take(piece.from);
      take(piece.to);
    }
  }
  for (const auto& poly : layers.areas) {
    for (const auto& v : poly.vertices) take(v);
  }
  if (state.wrap_limits) {
    xmin = std::min(xmin, state.wrap_limits->first);
    xmax = std::max(xmax, state.wrap_limits->second);
  }
  Axes axes;
  if (xmin > xmax) return axes;
  if (xmin == xmax) {
    xmin -= 0.5;
    xmax += 0.5;
  }
  if (ymin == ymax) {
    ymin -= 0.5;
    ymax += 0.5;
  }
  axes.xmin = xmin;
  axes.xmax = xmax;
  axes.ymin = ymin;
  axes.ymax = ymax;
  axes.xticks = nice_ticks(xmin, xmax);
  axes.yticks = nice_ticks(ymin, ymax);
  return axes;
}

std::vector<StatLine> compute_stats(const CoordinateState& state) {
  struct Acc {
    double sum = 0.0;
    std::size_t n = 0;
    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -std::numeric_limits<double>::infinity();
  };
  std::map<long long, Acc> panels;
  for (std::size_t i = 0; i < state.size(); ++i) {
    auto& acc = panels[panel_key(state.facet_offset[i])];
    acc.sum += state.y[i];
    ++acc.n;
    acc.xmin = std::min(acc.xmin, state.x[i]);
    acc.xmax = std::max(acc.xmax, state.x[i]);
  }
  std::vector<StatLine> out;
  for (const auto& [key, acc] : panels) {
    out.push_back({acc.sum / static_cast<double>(acc.n), acc.xmin, acc.xmax});
  }
  return out;
}

}  // namespace

LayerSet build_layers(const CoordinateState& state, std::span<const PointAttributes> attrs,
                      RenderMode mode, const LayerOptions& options) {
  LayerSet layers;
  layers.mode = mode;
  const auto segments = build_segments(state, attrs);
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (!attrs[i].visible) continue;
    layers.points.ids.push_back(i);
    layers.points.positions.push_back({state.x[i], state.y[i]});
    layers.points.colors.push_back(attrs[i].color);
    layers.points.sizes.push_back(attrs[i].size);
  }
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (attrs[i].brushed) layers.brush.points.push_back(i);
  }
  if (mode == RenderMode::line) {
    layers.lines = segments;
    for (std::size_t s = 0; s < segments.size(); ++s) {
      if (attrs[segments[s].from].brushed || attrs[segments[s].to].brushed) {
        layers.brush.segments.push_back(s);
      }
    }
  } else {
    layers.areas = build_polygons(state, segments);
    for (std::size_t k = 0; k < layers.areas.size(); ++k) {
      const auto& src = layers.areas[k].source_point;
      if (src && attrs[*src].brushed) layers.brush.polygons.push_back(k);
    }
  }
  layers.axes = compute_axes(state, layers);
  if (options.stats) layers.stats = compute_stats(state);
  return layers;
}

}  // namespace chronofold
