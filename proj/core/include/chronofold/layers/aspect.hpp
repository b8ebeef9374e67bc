#pragma once

#include "chronofold/model/coordinate_state.hpp"

namespace chronofold {

inline constexpr double kDefaultAspect = 2.0;

/// Width:height ratio that banks the median absolute segment slope to 45
/// degrees when the data ranges fill the plot: median|dy/dx| * Rx / Ry.
/// Returns kDefaultAspect when there are no sloped segments. Computed once
/// at load; interactions do not re-bank.
double initial_aspect(const CoordinateState& state);

}  // namespace chronofold
