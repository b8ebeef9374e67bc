#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "chronofold/algebra/movement.hpp"

namespace chronofold {

enum class Divider { mean, median, midrange, initialValue };

std::string_view to_string(Divider divider);
std::optional<Divider> parse_divider(std::string_view text);

/// Divider of one series; `ys` in time order (initialValue uses the first).
double divider_value(std::span<const double> ys, Divider divider);

/// dy = max(2p - 2y0, 0) for odd toggle counts, 0 for even, with p computed
/// per series from y0. `toggles` is the count including this press.
StepResult mirror_toggle(const CoordinateState& state, Divider divider, int toggles);

/// Per-point divider value for every series.
std::vector<double> series_dividers(const CoordinateState& state, Divider divider);

}  // namespace chronofold
