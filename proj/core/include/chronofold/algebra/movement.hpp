#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "chronofold/model/coordinate_state.hpp"
#include "chronofold/model/interaction.hpp"

namespace chronofold {

/// Per-point displacement (dx, dy) produced by one interaction step.
struct Movement {
  std::vector<double> dx;
  std::vector<double> dy;
  std::optional<InteractionRecord> produced_by;

  static Movement zero(std::size_t n) { return Movement{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0), std::nullopt}; }

  std::size_t size() const { return dx.size(); }
  bool x_only() const;  // dy identically zero
  bool y_only() const;  // dx identically zero
  bool is_zero() const { return x_only() && y_only(); }

  Movement& operator+=(const Movement& other);
  void apply_to(CoordinateState& state) const;
};

/// A movement plus the non-fatal conditions met while computing it
/// (clamping, no-op requests, unknown groups).
struct StepResult {
  Movement movement;
  std::vector<std::string> warnings;
};

}  // namespace chronofold
