#pragma once

#include <span>

#include "chronofold/algebra/movement.hpp"

namespace chronofold {

/// dx = (drag_end - drag_start) for points whose line group equals `group`.
/// An unknown group yields a zero movement and a warning.
StepResult shift_x(std::span<const int> line_groups, double drag_start, double drag_end,
                   int group);
StepResult shift_x(const CoordinateState& state, double drag_start, double drag_end, int group);

}  // namespace chronofold
