#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace chronofold {

/// Per-point line-group indicators, all 1-based.
///
/// `wrap` is the x-wrapping cycle, `variable`/`individual`/`series` are fixed
/// at ingest, `base` carries the drawable line id across baseline resets and
/// `line` is the drawable polyline id: one per distinct (series, base, wrap).
struct LineGroups {
  std::vector<int> wrap;
  std::vector<int> variable;
  std::vector<int> individual;
  std::vector<int> series;
  std::vector<int> base;
  std::vector<int> line;
};

/// Pre-wrap y values kept after a y-wrap so cut pieces can be rebuilt.
struct YBand {
  double height = 0.0;
  std::vector<double> unwrapped;
};

struct CoordinateState {
  std::vector<double> time;  // normalized time; defines drawing order, never moves
  std::vector<double> x0;
  std::vector<double> y0;
  std::vector<double> x;
  std::vector<double> y;
  LineGroups groups;

  // Display hints maintained alongside the coordinates.
  std::optional<std::pair<double, double>> wrap_limits;
  std::vector<double> facet_offset;  // current facet dy per point (area panels)
  std::optional<YBand> y_band;

  std::size_t size() const { return x0.size(); }

  /// Throws chronofold::Error if vector lengths disagree or a group id is < 1.
  void validate() const;

  /// Baseline state for `n` points: x = x0 = time, y = y0.
  static CoordinateState initial(std::vector<double> time, std::vector<double> values,
                                 LineGroups static_groups);
};

/// Recomputes `groups.line` from (series, base, wrap), numbering distinct
/// combinations in lexicographic order starting at 1.
void refresh_line_groups(LineGroups& groups);

/// Number of distinct values in a group vector (its ids need not be dense).
std::size_t count_groups(const std::vector<int>& ids);

}  // namespace chronofold

namespace chronofold {

/// Consecutive point pairs (earlier, later) within each drawable line, lines
/// in ascending id order and points in time order. Lines with one point
/// contribute nothing.
std::vector<std::pair<std::size_t, std::size_t>> segment_pairs(const CoordinateState& state);

}  // namespace chronofold
