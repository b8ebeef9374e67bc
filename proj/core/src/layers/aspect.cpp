#include "chronofold/layers/aspect.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace chronofold {

double initial_aspect(const CoordinateState& state) {
  std::vector<double> slopes;
  for (auto [a, b] : segment_pairs(state)) {
    const double dx = state.x[b] - state.x[a];
    if (dx == 0.0) continue;
    slopes.push_back(std::abs((state.y[b] - state.y[a]) / dx));
  }
  if (slopes.empty() || state.size() == 0) return kDefaultAspect;
  const auto [xlo, xhi] = std::minmax_element(state.x.begin(), state.x.end());
  const auto [ylo, yhi] = std::minmax_element(state.y.begin(), state.y.end());
  const double rx = *xhi - *xlo;
  const double ry = *yhi - *ylo;
  std::sort(slopes.begin(), slopes.end());
  const std::size_t m = slopes.size();
  const double median = m % 2 == 1 ? slopes[m / 2] : 0.5 * (slopes[m / 2 - 1] + slopes[m / 2]);
  if (rx <= 0.0 || ry <= 0.0 || median <= 0.0) return kDefaultAspect;
  return median * rx / ry;
}

}  // namespace chronofold
