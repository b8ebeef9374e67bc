#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chronofold/model/coordinate_state.hpp"
#include "chronofold/model/record.hpp"

namespace chronofold {

enum class RenderMode { line, area };

std::string_view to_string(RenderMode mode);

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

struct PointLayer {
  std::vector<std::size_t> ids;
  std::vector<Vec2> positions;
  std::vector<std::string> colors;
  std::vector<double> sizes;
  friend bool operator==(const PointLayer&, const PointLayer&) = default;
};

/// Drawn part of a segment. A segment crossing y-wrap cut lines has several.
struct SegmentPiece {
  Vec2 from;
  Vec2 to;
  friend bool operator==(const SegmentPiece&, const SegmentPiece&) = default;
};

/// Connection between consecutive points of one line group. Its color is
/// the color of the earlier endpoint.
struct Segment {
  std::size_t from = 0;
  std::size_t to = 0;
  int line = 0;
  std::string color;
  std::vector<SegmentPiece> pieces;
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Quadrilateral: two series (or cut) vertices and two baseline vertices.
/// Construction vertices have no attributes; the polygon links back to the
/// earlier endpoint of its segment through source_point.
struct AreaPolygon {
  std::array<Vec2, 4> vertices;
  std::string color;
  std::optional<std::size_t> source_point;
  std::size_t segment = 0;
  friend bool operator==(const AreaPolygon&, const AreaPolygon&) = default;
};

struct BrushLayer {
  std::vector<std::size_t> points;
  std::vector<std::size_t> segments;  // indices into LayerSet::lines
  std::vector<std::size_t> polygons;  // indices into LayerSet::areas
  friend bool operator==(const BrushLayer&, const BrushLayer&) = default;
};

struct Axes {
  double xmin = 0.0;
  double xmax = 1.0;
  double ymin = 0.0;
  double ymax = 1.0;
  std::vector<double> xticks;
  std::vector<double> yticks;
  friend bool operator==(const Axes&, const Axes&) = default;
};

/// Per-facet mean line drawn by the optional stats layer.
struct StatLine {
  double y = 0.0;
  double xmin = 0.0;
  double xmax = 0.0;
  friend bool operator==(const StatLine&, const StatLine&) = default;
};

struct LayerOptions {
  bool stats = false;
};

struct LayerSet {
  RenderMode mode = RenderMode::line;
  PointLayer points;
  std::vector<Segment> lines;      // line mode
  std::vector<AreaPolygon> areas;  // area mode
  BrushLayer brush;
  Axes axes;
  std::vector<StatLine> stats;
  friend bool operator==(const LayerSet&, const LayerSet&) = default;
};

/// Segments of every line group, in the order of segment_pairs().
std::vector<Segment> build_segments(const CoordinateState& state,
                                    std::span<const PointAttributes> attrs);

/// One polygon per segment piece, closed to the facet panel's minimum y, or
/// to the band floor for y-wrapped data.
std::vector<AreaPolygon> build_polygons(const CoordinateState& state,
                                        std::span<const Segment> segments);

/// Derives every layer from the current coordinates and attributes.
/// Deterministic: equal inputs give equal (bit-identical) output.
LayerSet build_layers(const CoordinateState& state, std::span<const PointAttributes> attrs,
                      RenderMode mode, const LayerOptions& options = {});

/// Up to about `target` round tick values covering [lo, hi].
std::vector<double> nice_ticks(double lo, double hi, int target = 5);

}  // namespace chronofold
