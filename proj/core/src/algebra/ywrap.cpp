#include "chronofold/algebra/ywrap.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chronofold/model/errors.hpp"

namespace chronofold {

double wrap_y_value(double y, double band) {
  if (y == 0.0) return 0.0;
  return y - (std::ceil(y / band) - 1.0) * band;
}

std::vector<double> cut_levels(double ya, double yb, double band) {
  const double lo = std::min(ya, yb);
  const double hi = std::max(ya, yb);
  std::vector<double> levels;
  for (double k = std::floor(lo / band); k * band < hi; k += 1.0) {
    const double level = k * band;
    if (level > lo && level < hi) levels.push_back(level);
  }
  if (yb < ya) std::reverse(levels.begin(), levels.end());
  return levels;
}

std::vector<YPiece> y_pieces(double ya, double yb, double band) {
  std::vector<double> ts = {0.0};
  for (double level : cut_levels(ya, yb, band)) ts.push_back((level - ya) / (yb - ya));
  ts.push_back(1.0);

  std::vector<YPiece> pieces;
  for (std::size_t k = 1; k < ts.size(); ++k) {
    const double t0 = ts[k - 1];
    const double t1 = ts[k];
    if (!(t1 > t0)) continue;
    const double mid = ya + (yb - ya) * 0.5 * (t0 + t1);
    const double offset = (std::ceil(mid / band) - 1.0) * band;
    pieces.push_back(YPiece{t0, t1, ya + (yb - ya) * t0 - offset, ya + (yb - ya) * t1 - offset});
  }
  return pieces;
}

YWrapResult wrap_y(const CoordinateState& state, double band) {
  if (!(band > 0.0) || !std::isfinite(band)) {
    throw InteractionError("y-wrap band height must be positive");
  }
  YWrapResult result;
  result.movement = Movement::zero(state.size());
  if (state.size() == 0) return result;

  const auto [lo, hi] = std::minmax_element(state.y.begin(), state.y.end());
  if (band >= *hi - *lo) {
    result.warnings.push_back("band height " + std::to_string(band) +
                              " covers the whole y-range; nothing to wrap");
    return result;
  }
  for (std::size_t i = 0; i < state.size(); ++i) {
    result.movement.dy[i] = wrap_y_value(state.y[i], band) - state.y[i];
  }
  for (const auto& [a, b] : segment_pairs(state)) {
    const double ya = state.y[a];
    const double yb = state.y[b];
    for (double level : cut_levels(ya, yb, band)) {
      result.cuts.push_back(CutVertex{a, b, (level - ya) / (yb - ya), level, a});
    }
  }
  result.applied = true;
  return result;
}

}  // namespace chronofold
