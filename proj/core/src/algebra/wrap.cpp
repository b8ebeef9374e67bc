#include "chronofold/algebra/wrap.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chronofold/model/errors.hpp"

namespace chronofold {

WrapAxis::WrapAxis(std::span<const double> x0) : order_(x0.begin(), x0.end()) {
  std::sort(order_.begin(), order_.end());
  order_.erase(std::unique(order_.begin(), order_.end()), order_.end());
  if (order_.empty()) throw InteractionError("cannot wrap an empty axis");
}

long WrapAxis::max_depth(int stop) const {
  const long n = static_cast<long>(order_.size());
  return std::max(0L, n - stop);
}

double WrapAxis::span(long depth, int stop) const {
  const long n = static_cast<long>(order_.size());
  const long d = std::clamp(depth, 0L, max_depth(stop));
  return at(static_cast<std::size_t>(n - d)) - lower() + 1.0;
}

int wrap_cycle(double x, double lower, double span) {
  return static_cast<int>(std::ceil((x - lower + 1.0) / span));
}

double wrapped_coordinate(double x, double lower, double span) {
  return x - (wrap_cycle(x, lower, span) - 1) * span;
}

WrapLayout wrap_layout(std::span<const double> x0, double lower, double span) {
  WrapLayout layout;
  layout.span = span;
  layout.limits = {lower, lower + span - 1.0};
  layout.groups.resize(x0.size());
  layout.dx.resize(x0.size());
  for (std::size_t i = 0; i < x0.size(); ++i) {
    const int l = std::max(1, wrap_cycle(x0[i], lower, span));
    layout.groups[i] = l;
    layout.dx[i] = -(l - 1) * span;
  }
  return layout;
}

namespace {

void require_wrappable(const WrapAxis& axis, int stop) {
  if (stop < 1) throw InteractionError("wrap stop must be at least 1");
  if (axis.size() < static_cast<std::size_t>(stop) + 1) {
    throw InteractionError("wrap refused: the series has " + std::to_string(axis.size()) +
                           " time points; at least " + std::to_string(stop + 1) +
                           " are needed");
  }
}

WrapResult finish(const CoordinateState& state, const WrapAxis& axis, long depth, int stop,
                  std::vector<std::string> warnings) {
  WrapResult result;
  const double span = axis.span(depth, stop);
  WrapLayout layout = wrap_layout(state.x0, axis.lower(), span);
  result.movement.dx = std::move(layout.dx);
  result.movement.dy.assign(state.size(), 0.0);
  result.groups = std::move(layout.groups);
  result.limits = layout.limits;
  result.state = WrapState{depth, span, stop};
  result.warnings = std::move(warnings);
  return result;
}

long clamp_depth(const WrapAxis& axis, long depth, int stop, std::vector<std::string>& warnings) {
  const long max_depth = axis.max_depth(stop);
  if (depth > max_depth) {
    warnings.push_back("wrap clamped at " + std::to_string(stop) + " points per segment (span " +
                       std::to_string(axis.span(max_depth, stop)) + ")");
    return max_depth;
  }
  return depth;
}

}  // namespace

WrapResult wrap_x_step(const CoordinateState& state, const WrapState& wrap) {
  return wrap_x_multiplicative(state, wrap, std::span<const int>{});
}

WrapResult wrap_x_multiplicative(const CoordinateState& state, const WrapState& wrap,
                                 std::span<const int> step_sizes) {
  const WrapAxis axis(state.x0);
  require_wrappable(axis, wrap.stop);
  long depth = wrap.j;
  if (step_sizes.empty()) {
    depth += 1;
  } else {
    for (int u : step_sizes) {
      if (u < 0) throw InteractionError("wrap step sizes must be non-negative");
      depth += u;
    }
  }
  std::vector<std::string> warnings;
  depth = clamp_depth(axis, depth, wrap.stop, warnings);
  return finish(state, axis, depth, wrap.stop, std::move(warnings));
}

WrapResult wrap_x_to_period(const CoordinateState& state, int period_length, int stop) {
  const WrapAxis axis(state.x0);
  require_wrappable(axis, stop);
  const long n = static_cast<long>(axis.size());
  std::vector<std::string> warnings;
  if (period_length >= n) {
    warnings.push_back("period " + std::to_string(period_length) +
                       " is not shorter than the series; nothing to wrap");
    return finish(state, axis, 0, stop, std::move(warnings));
  }
  if (period_length < stop) {
    warnings.push_back("period " + std::to_string(period_length) + " raised to the wrap stop " +
                       std::to_string(stop));
    period_length = stop;
  }
  return finish(state, axis, n - period_length, stop, std::move(warnings));
}

double irregular_upper_limit(const WrapAxis& axis, long j, double speed) {
  return axis.upper() - static_cast<double>(j) * speed;
}

std::size_t irregular_points_moved(const WrapAxis& axis, long j, double speed) {
  const double limit = irregular_upper_limit(axis, j, speed);
  std::size_t moved = 0;
  for (std::size_t k = axis.size(); k >= 1 && axis.at(k) > limit; --k) ++moved;
  return moved;
}

WrapResult wrap_x_irregular(const CoordinateState& state, long j, double speed, int stop) {
  if (!(speed > 0.0) || !std::isfinite(speed)) {
    throw InteractionError("irregular wrap speed must be positive");
  }
  const WrapAxis axis(state.x0);
  require_wrappable(axis, stop);
  std::vector<std::string> warnings;
  if (j < 0) j = 0;
  const double floor_limit = axis.at(static_cast<std::size_t>(stop));
  if (irregular_upper_limit(axis, j, speed) < floor_limit) {
    const long admissible =
        static_cast<long>(std::floor((axis.upper() - floor_limit) / speed));
    warnings.push_back("irregular wrap stopped: the range would drop below the first " +
                       std::to_string(stop) + " points");
    j = std::max(0L, admissible);
  }
  const double limit = irregular_upper_limit(axis, j, speed);
  const double span = limit - axis.lower() + 1.0;

  WrapResult result;
  WrapLayout layout = wrap_layout(state.x0, axis.lower(), span);
  result.movement.dx = std::move(layout.dx);
  result.movement.dy.assign(state.size(), 0.0);
  result.groups = std::move(layout.groups);
  result.limits = {axis.lower(), limit};
  result.state = WrapState{j, span, stop};
  result.warnings = std::move(warnings);
  return result;
}

}  // namespace chronofold
