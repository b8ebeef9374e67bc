#include "chronofold/algebra/mirror.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "chronofold/model/errors.hpp"

namespace chronofold {

std::string_view to_string(Divider divider) {
  switch (divider) {
    case Divider::mean: return "mean";
    case Divider::median: return "median";
    case Divider::midrange: return "midrange";
    case Divider::initialValue: return "initial";
  }
  return "mean";
}

std::optional<Divider> parse_divider(std::string_view text) {
  if (text == "mean") return Divider::mean;
  if (text == "median") return Divider::median;
  if (text == "midrange" || text == "midpoint") return Divider::midrange;
  if (text == "initial" || text == "initialValue") return Divider::initialValue;
  return std::nullopt;
}

double divider_value(std::span<const double> ys, Divider divider) {
  if (ys.empty()) throw InteractionError("cannot compute a divider for an empty series");
  switch (divider) {
    case Divider::mean: {
      double sum = 0.0;
      for (double v : ys) sum += v;
      return sum / static_cast<double>(ys.size());
    }
    case Divider::median: {
      std::vector<double> sorted(ys.begin(), ys.end());
      std::sort(sorted.begin(), sorted.end());
      const std::size_t mid = sorted.size() / 2;
      return sorted.size() % 2 == 1 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
    }
    case Divider::midrange: {
      const auto [lo, hi] = std::minmax_element(ys.begin(), ys.end());
      return 0.5 * (*lo + *hi);
    }
    case Divider::initialValue:
      return ys.front();
  }
  return ys.front();
}

namespace {

std::map<int, std::vector<std::size_t>> rows_by_series(const CoordinateState& state) {
  std::map<int, std::vector<std::size_t>> rows;
  for (std::size_t i = 0; i < state.size(); ++i) rows[state.groups.series[i]].push_back(i);
  for (auto& [_, r] : rows) {
    std::stable_sort(r.begin(), r.end(),
                     [&](std::size_t a, std::size_t b) { return state.time[a] < state.time[b]; });
  }
  return rows;
}

}  // namespace

std::vector<double> series_dividers(const CoordinateState& state, Divider divider) {
  std::vector<double> p(state.size(), 0.0);
  for (const auto& [_, rows] : rows_by_series(state)) {
    std::vector<double> ys;
    ys.reserve(rows.size());
    for (std::size_t row : rows) ys.push_back(state.y0[row]);
    const double value = divider_value(ys, divider);
    for (std::size_t row : rows) p[row] = value;
  }
  return p;
}

StepResult mirror_toggle(const CoordinateState& state, Divider divider, int toggles) {
  StepResult result;
  result.movement = Movement::zero(state.size());
  for (const auto& [series, rows] : rows_by_series(state)) {
    const auto [lo, hi] = std::minmax_element(rows.begin(), rows.end(), [&](auto a, auto b) {
      return state.y0[a] < state.y0[b];
    });
    if (state.y0[*lo] == state.y0[*hi]) {
      result.warnings.push_back("series " + std::to_string(series) +
                                " is constant; mirroring leaves it unchanged");
    }
  }
  if (toggles % 2 == 0) return result;
  const std::vector<double> p = series_dividers(state, divider);
  for (std::size_t i = 0; i < state.size(); ++i) {
    result.movement.dy[i] = std::max(2.0 * p[i] - 2.0 * state.y0[i], 0.0);
  }
  return result;
}

}  // namespace chronofold
