#include "chronofold/algebra/shift.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chronofold/model/errors.hpp"

namespace chronofold {

StepResult shift_x(std::span<const int> line_groups, double drag_start, double drag_end,
                   int group) {
  if (!std::isfinite(drag_start) || !std::isfinite(drag_end)) {
    throw InteractionError("shift drag positions must be finite");
  }
  StepResult result;
  result.movement = Movement::zero(line_groups.size());
  const double delta = drag_end - drag_start;
  bool found = false;
  for (std::size_t i = 0; i < line_groups.size(); ++i) {
    if (line_groups[i] == group) {
      result.movement.dx[i] = delta;
      found = true;
    }
  }
  if (!found) result.warnings.push_back("unknown line group " + std::to_string(group));
  return result;
}

StepResult shift_x(const CoordinateState& state, double drag_start, double drag_end, int group) {
  return shift_x(state.groups.line, drag_start, drag_end, group);
}

}  // namespace chronofold
