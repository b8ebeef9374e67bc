#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "chronofold/algebra/movement.hpp"
#include "chronofold/model/coordinate_state.hpp"

namespace chronofold {

inline constexpr int kDefaultWrapStop = 3;

/// The sorted distinct x values x_(1) < ... < x_(n) that wrapping indexes into.
class WrapAxis {
 public:
  explicit WrapAxis(std::span<const double> x0);

  std::size_t size() const { return order_.size(); }
  /// k-th order statistic, 1-based.
  double at(std::size_t k) const { return order_.at(k - 1); }
  double lower() const { return order_.front(); }
  double upper() const { return order_.back(); }

  /// Largest admissible depth n - stop (0 if the axis is too short).
  long max_depth(int stop = kDefaultWrapStop) const;
  /// Δ_{n-depth} = x_(n-depth) - x_(1) + 1 with depth clamped to [0, n - stop].
  double span(long depth, int stop = kDefaultWrapStop) const;

 private:
  std::vector<double> order_;
};

/// Position of x after wrapping with span Δ onto [lower, lower + Δ - 1]:
/// x - (ceil((x - lower + 1) / Δ) - 1) Δ.
double wrapped_coordinate(double x, double lower, double span);
/// ceil((x - lower + 1) / Δ), the wrap cycle of x.
int wrap_cycle(double x, double lower, double span);

struct WrapLayout {
  std::vector<int> groups;  // l, the wrap cycle of each point
  std::vector<double> dx;   // -(l - 1) Δ, relative to x0
  double span = 0.0;
  std::pair<double, double> limits;  // (x_(1), x_(1) + Δ - 1)
};

WrapLayout wrap_layout(std::span<const double> x0, double lower, double span);

/// Completed wrap steps and the resulting span for regular keystroke wrapping.
struct WrapState {
  long j = 0;
  double delta = 0.0;
  int stop = kDefaultWrapStop;
};

struct WrapResult {
  Movement movement;  // relative to x0
  std::vector<int> groups;
  WrapState state;
  std::pair<double, double> limits;
  std::vector<std::string> warnings;
};

/// Advances regular wrapping by one keystroke. Throws InteractionError when
/// the axis has fewer than stop + 1 points.
WrapResult wrap_x_step(const CoordinateState& state, const WrapState& wrap);

/// Each entry of `step_sizes` sends that many points to the left; the span
/// after all of them is Δ_{n - j - Σu}, clamped to Δ_stop.
WrapResult wrap_x_multiplicative(const CoordinateState& state, const WrapState& wrap,
                                 std::span<const int> step_sizes);

/// Jumps straight to the period p: span Δ_p. p >= n is a no-op with a warning.
WrapResult wrap_x_to_period(const CoordinateState& state, int period_length,
                            int stop = kDefaultWrapStop);

/// Upper limit after j irregular steps: x_(n) - j·speed.
double irregular_upper_limit(const WrapAxis& axis, long j, double speed);

/// Irregular wrapping after j steps of size `speed`. The span is
/// U_j - x_(1) + 1 with U_j the upper limit; stepping past x_(stop) stops
/// at the last admissible step.
WrapResult wrap_x_irregular(const CoordinateState& state, long j, double speed,
                            int stop = kDefaultWrapStop);

/// Number of axis points beyond the irregular upper limit after j steps, g_j.
std::size_t irregular_points_moved(const WrapAxis& axis, long j, double speed);

}  // namespace chronofold
