#include "chronofold/algebra/interactor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "chronofold/algebra/shift.hpp"
#include "chronofold/algebra/standardize.hpp"
#include "chronofold/model/errors.hpp"

namespace chronofold {

namespace {

InteractionRecord wrap_record(int stop, double period, double speed, double points) {
  InteractionRecord r;
  r.kind = InteractionKind::wrapX;
  r.params = {static_cast<double>(stop), period, speed};
  r.inputs = {points};
  return r;
}

}  // namespace

Interactor::Interactor(CoordinateState& state) : state_(&state) { reset_tracks(); }

void Interactor::reset_tracks() {
  wrap_ = WrapTrack{};
  wrap_.total.assign(size(), 0.0);
  facet_ = FacetTrack{};
  facet_.total.assign(size(), 0.0);
  mirror_ = MirrorTrack{};
  mirror_.total.assign(size(), 0.0);
  shift_total_.assign(size(), 0.0);
  last_shift_snapshot_ = 0;
  last_shift_snapshot_groups_.clear();
}

Movement Interactor::delta(std::vector<double>& total, const std::vector<double>& next,
                           bool along_x) {
  Movement m = Movement::zero(size());
  std::vector<double>& out = along_x ? m.dx : m.dy;
  for (std::size_t i = 0; i < size(); ++i) {
    out[i] = next[i] - total[i];
    total[i] = next[i];
  }
  recompose();
  return m;
}

void Interactor::recompose() {
  CoordinateState& s = *state_;
  for (std::size_t i = 0; i < size(); ++i) {
    s.x[i] = s.x0[i] + wrap_.total[i] + shift_total_[i];
    s.y[i] = s.y0[i] + facet_.total[i] + mirror_.total[i];
  }
}

Movement Interactor::apply_wrap(const InteractionRecord& record,
                                std::vector<std::string>& /*warnings*/) {
  const WrapAxis axis(state_->x0);
  double upper;
  if (wrap_.irregular_steps > 0 || wrap_.speed > 0.0) {
    upper = axis.upper() - wrap_.speed * static_cast<double>(wrap_.irregular_steps);
  } else {
    upper = axis.lower() + axis.span(wrap_.depth, wrap_.stop) - 1.0;
  }
  WrapLayout layout = wrap_layout(state_->x0, axis.lower(), upper - axis.lower() + 1.0);
  Movement m = delta(wrap_.total, layout.dx, true);
  state_->groups.wrap = std::move(layout.groups);
  refresh_line_groups(state_->groups);
  if (wrap_.depth > 0 || wrap_.irregular_steps > 0) {
    state_->wrap_limits = layout.limits;
  } else {
    state_->wrap_limits.reset();
  }
  m.produced_by = record;
  return m;
}

StepResult Interactor::wrap_x(int steps, int stop) {
  if (wrap_.irregular_steps > 0) {
    throw InteractionError("regular wrapping cannot follow irregular wrapping; reset first");
  }
  wrap_.speed = 0.0;
  const WrapAxis axis(state_->x0);
  if (stop < 1 || axis.size() < static_cast<std::size_t>(stop) + 1) {
    throw InteractionError("wrap refused: " + std::to_string(axis.size()) +
                           " time points cannot be wrapped with a stop of " +
                           std::to_string(stop));
  }
  wrap_.stop = stop;
  StepResult result;
  result.movement = Movement::zero(size());
  bool clamped = false;
  for (int s = 0; s < steps; ++s) {
    const int u = wrap_.depth < axis.max_depth(stop) ? 1 : 0;
    if (u == 0) clamped = true;
    wrap_.depth += u;
    const InteractionRecord& r = stream_.push(wrap_record(stop, 0.0, 0.0, u));
    result.movement += apply_wrap(r, result.warnings);
  }
  if (clamped) {
    result.warnings.push_back("wrap stop reached: " + std::to_string(stop) +
                              " points per segment");
  }
  return result;
}

StepResult Interactor::unwrap_x(int steps) {
  StepResult result;
  result.movement = Movement::zero(size());
  for (int s = 0; s < steps; ++s) {
    if (wrap_.irregular_steps > 0) {
      --wrap_.irregular_steps;
      const InteractionRecord& r =
          stream_.push(wrap_record(wrap_.stop, 0.0, wrap_.speed, -1.0));
      result.movement += apply_wrap(r, result.warnings);
    } else if (wrap_.depth > 0) {
      --wrap_.depth;
      const InteractionRecord& r = stream_.push(wrap_record(wrap_.stop, 0.0, 0.0, -1.0));
      result.movement += apply_wrap(r, result.warnings);
    } else {
      result.warnings.push_back("series is not wrapped");
      break;
    }
  }
  return result;
}

StepResult Interactor::wrap_x_multiplicative(std::span<const int> step_sizes) {
  if (wrap_.irregular_steps > 0) {
    throw InteractionError("regular wrapping cannot follow irregular wrapping; reset first");
  }
  wrap_.speed = 0.0;
  const WrapAxis axis(state_->x0);
  if (axis.size() < static_cast<std::size_t>(wrap_.stop) + 1) {
    throw InteractionError("wrap refused: too few time points");
  }
  StepResult result;
  result.movement = Movement::zero(size());
  for (int u : step_sizes) {
    if (u < 0) throw InteractionError("wrap step sizes must be non-negative");
    const long room = axis.max_depth(wrap_.stop) - wrap_.depth;
    long applied = u;
    if (applied > room) {
      applied = room;
      result.warnings.push_back("cumulative wrap clamped to span " +
                                std::to_string(axis.span(axis.max_depth(wrap_.stop), wrap_.stop)));
    }
    wrap_.depth += applied;
    const InteractionRecord& r =
        stream_.push(wrap_record(wrap_.stop, 0.0, 0.0, static_cast<double>(applied)));
    result.movement += apply_wrap(r, result.warnings);
  }
  return result;
}

StepResult Interactor::wrap_x_to_period(int period_length) {
  if (wrap_.irregular_steps > 0) {
    throw InteractionError("regular wrapping cannot follow irregular wrapping; reset first");
  }
  wrap_.speed = 0.0;
  const WrapAxis axis(state_->x0);
  const long n = static_cast<long>(axis.size());
  if (n < wrap_.stop + 1) throw InteractionError("wrap refused: too few time points");
  StepResult result;
  result.movement = Movement::zero(size());
  if (period_length >= n) {
    result.warnings.push_back("period " + std::to_string(period_length) +
                              " is not shorter than the series; nothing to wrap");
    return result;
  }
  if (period_length < wrap_.stop) {
    result.warnings.push_back("period raised to the wrap stop " + std::to_string(wrap_.stop));
    period_length = wrap_.stop;
  }
  const long target = n - period_length;
  const long u = target - wrap_.depth;
  wrap_.depth = target;
  const InteractionRecord& r = stream_.push(
      wrap_record(wrap_.stop, static_cast<double>(period_length), 0.0, static_cast<double>(u)));
  result.movement += apply_wrap(r, result.warnings);
  return result;
}

StepResult Interactor::wrap_x_irregular(double speed, int steps) {
  if (!(speed > 0.0) || !std::isfinite(speed)) {
    throw InteractionError("irregular wrap speed must be positive");
  }
  if (wrap_.depth > 0) {
    throw InteractionError("irregular wrapping cannot follow regular wrapping; reset first");
  }
  if (wrap_.irregular_steps > 0 && speed != wrap_.speed) {
    throw InteractionError("irregular wrap speed cannot change mid-wrap; unwrap first");
  }
  const WrapAxis axis(state_->x0);
  if (axis.size() < static_cast<std::size_t>(wrap_.stop) + 1) {
    throw InteractionError("wrap refused: too few time points");
  }
  wrap_.speed = speed;
  const double floor_limit = axis.at(static_cast<std::size_t>(wrap_.stop));
  StepResult result;
  result.movement = Movement::zero(size());
  for (int s = 0; s < steps; ++s) {
    const double next_limit =
        axis.upper() - speed * static_cast<double>(wrap_.irregular_steps + 1);
    if (next_limit < floor_limit) {
      result.warnings.push_back("irregular wrap stopped: the range would drop below the first " +
                                std::to_string(wrap_.stop) + " points");
      break;
    }
    ++wrap_.irregular_steps;
    const InteractionRecord& r = stream_.push(wrap_record(wrap_.stop, 0.0, speed, 1.0));
    result.movement += apply_wrap(r, result.warnings);
  }
  return result;
}

YWrapResult Interactor::wrap_y(double band) {
  YWrapResult result = chronofold::wrap_y(*state_, band);
  if (!result.applied) return result;
  std::vector<double> unwrapped = state_->y;
  std::vector<double> wrapped(size());
  for (std::size_t i = 0; i < size(); ++i) wrapped[i] = state_->y[i] + result.movement.dy[i];
  rekey(ResetKind::wrapY, std::move(wrapped));
  state_->y_band = YBand{band, std::move(unwrapped)};
  InteractionRecord marker;
  marker.kind = InteractionKind::wrapY;
  marker.j = 1;
  marker.params = {band};
  result.movement.produced_by = marker;
  return result;
}

void Interactor::warn_if_not_standardized(std::vector<std::string>& warnings) const {
  constexpr double eps = 1e-9;
  for (double v : state_->y0) {
    if (v < -eps || v > 1.0 + eps) {
      warnings.push_back("lines are not standardized to [0, 1]; facets may overlap");
      return;
    }
  }
}

Movement Interactor::apply_facet(InteractionKind kind, std::vector<int> groups, double step,
                                 std::vector<std::string>& warnings) {
  auto it = std::find_if(facet_.stack.begin(), facet_.stack.end(),
                         [&](const FacetEntry& e) { return e.kind == kind; });
  if (it == facet_.stack.end()) {
    facet_.stack.push_back(FacetEntry{kind, {}, 1, 0, step, 0});
    it = std::prev(facet_.stack.end());
  }
  if (it->snapshot == 0 || it->groups != groups) {
    it->groups = std::move(groups);
    it->count = it->groups.empty() ? 1 : *std::max_element(it->groups.begin(), it->groups.end());
    it->snapshot = stream_.store_snapshot(it->groups);
  }
  ++it->presses;
  it->step = step;

  InteractionRecord record;
  record.kind = kind;
  if (kind == InteractionKind::facetIndividual) record.params = {step};
  record.snapshot = it->snapshot;
  const InteractionRecord& r = stream_.push(std::move(record));

  std::vector<FacetDimension> dims;
  dims.reserve(facet_.stack.size());
  for (const FacetEntry& e : facet_.stack) {
    const double f =
        e.kind == InteractionKind::facetIndividual ? facet_fraction(e.presses, e.step) : 1.0;
    dims.push_back(FacetDimension{e.groups, e.count, f});
  }
  Movement m = delta(facet_.total, facet_offsets(dims), false);
  state_->facet_offset = facet_.total;
  warn_if_not_standardized(warnings);
  m.produced_by = r;
  return m;
}

StepResult Interactor::facet_individual(int steps, double step) {
  facet_full_split(step);  // validates the step
  StepResult result;
  result.movement = Movement::zero(size());
  for (int s = 0; s < steps; ++s) {
    result.movement += apply_facet(InteractionKind::facetIndividual, state_->groups.individual,
                                   step, result.warnings);
  }
  std::sort(result.warnings.begin(), result.warnings.end());
  result.warnings.erase(std::unique(result.warnings.begin(), result.warnings.end()),
                        result.warnings.end());
  return result;
}

StepResult Interactor::facet_variable() {
  StepResult result;
  result.movement = apply_facet(InteractionKind::facetVariable,
                                facet_groups(state_->groups, FacetGrouping::variable), 1.0,
                                result.warnings);
  return result;
}

StepResult Interactor::facet_period() {
  StepResult result;
  if (count_groups(state_->groups.wrap) < 2) {
    result.warnings.push_back("series is not wrapped; faceting by period has no effect");
  }
  result.movement = apply_facet(InteractionKind::facetPeriod, state_->groups.wrap, 1.0,
                                result.warnings);
  return result;
}

StepResult Interactor::mirror(Divider divider) {
  ++mirror_.toggles;
  StepResult pure = mirror_toggle(*state_, divider, mirror_.toggles);
  std::vector<double> next(size());
  for (std::size_t i = 0; i < size(); ++i) next[i] = pure.movement.dy[i];

  InteractionRecord record;
  record.kind = InteractionKind::mirror;
  record.params = {static_cast<double>(divider)};
  const InteractionRecord& r = stream_.push(std::move(record));

  StepResult result;
  result.movement = delta(mirror_.total, next, false);
  result.movement.produced_by = r;
  result.warnings = std::move(pure.warnings);
  return result;
}

StepResult Interactor::shift_x(double drag_start, double drag_end, int group) {
  StepResult result = chronofold::shift_x(*state_, drag_start, drag_end, group);
  if (last_shift_snapshot_ == 0 || stream_.snapshot(last_shift_snapshot_) == nullptr ||
      last_shift_snapshot_groups_ != state_->groups.line) {
    last_shift_snapshot_groups_ = state_->groups.line;
    last_shift_snapshot_ = stream_.store_snapshot(state_->groups.line);
  }
  InteractionRecord record;
  record.kind = InteractionKind::shiftX;
  record.inputs = {drag_start, drag_end, static_cast<double>(group)};
  record.snapshot = last_shift_snapshot_;
  const InteractionRecord& r = stream_.push(std::move(record));
  for (std::size_t i = 0; i < size(); ++i) shift_total_[i] += result.movement.dx[i];
  recompose();
  result.movement.produced_by = r;
  return result;
}

StepResult Interactor::standardize() {
  std::vector<double> next = standardize_lines(state_->y, state_->groups.series);
  StepResult result;
  result.movement = Movement::zero(size());
  for (std::size_t i = 0; i < size(); ++i) result.movement.dy[i] = next[i] - state_->y[i];
  rekey(ResetKind::standardize, std::move(next));
  return result;
}

void Interactor::reload_baseline(std::vector<double> x, std::vector<double> y,
                                 std::vector<int> lines) {
  if (x.size() != size() || y.size() != size() || (!lines.empty() && lines.size() != size())) {
    throw InteractionError("reloaded coordinates have " + std::to_string(x.size()) +
                           " points, expected " + std::to_string(size()));
  }
  if (std::any_of(lines.begin(), lines.end(), [](int l) { return l < 1; })) {
    throw InteractionError("reloaded line ids must be positive");
  }
  state_->x = std::move(x);
  rekey(ResetKind::reload, std::move(y));
  if (!lines.empty()) {
    state_->groups.base = std::move(lines);
    refresh_line_groups(state_->groups);
  }
}

void Interactor::rekey(ResetKind kind, std::vector<double> new_y) {
  resets_.push_back(BaselineReset{kind, stream_.size()});
  CoordinateState& s = *state_;
  s.x0 = s.x;
  s.y0 = new_y;
  s.y = std::move(new_y);
  s.groups.base = s.groups.line;
  s.groups.wrap.assign(size(), 1);
  refresh_line_groups(s.groups);
  s.wrap_limits.reset();
  s.facet_offset.assign(size(), 0.0);
  s.y_band.reset();
  stream_.clear();
  reset_tracks();
}

}  // namespace chronofold
