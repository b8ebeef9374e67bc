#pragma once

#include "chronofold/model/coordinate_state.hpp"
#include "chronofold/model/interaction.hpp"

namespace chronofold {

/// Rebuilds the current coordinates as baseline plus the closed-form
/// movement of every interaction kind in `stream`.
///
/// Only the baseline (x0, y0), time and static line groups of `state` are
/// read. Throws UnrecoverableState when a record names a group snapshot the
/// stream does not hold, and InteractionError for malformed records.
CoordinateState recompute_baseline(const CoordinateState& state, const InteractionStream& stream);

}  // namespace chronofold
