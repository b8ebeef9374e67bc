#include "chronofold/model/coordinate_state.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>

#include "chronofold/model/errors.hpp"

namespace chronofold {

namespace {

void check_length(const char* what, std::size_t actual, std::size_t n) {
  if (actual != n) {
    throw Error(std::string("coordinate state: ") + what + " has length " +
                std::to_string(actual) + ", expected " + std::to_string(n));
  }
}

void check_groups(const char* what, const std::vector<int>& ids, std::size_t n) {
  check_length(what, ids.size(), n);
  if (std::any_of(ids.begin(), ids.end(), [](int id) { return id < 1; })) {
    throw Error(std::string("coordinate state: ") + what + " contains a non-positive group id");
  }
}

}  // namespace

void CoordinateState::validate() const {
  const std::size_t n = x0.size();
  check_length("time", time.size(), n);
  check_length("y0", y0.size(), n);
  check_length("x", x.size(), n);
  check_length("y", y.size(), n);
  check_length("facet_offset", facet_offset.size(), n);
  check_groups("wrap", groups.wrap, n);
  check_groups("variable", groups.variable, n);
  check_groups("individual", groups.individual, n);
  check_groups("series", groups.series, n);
  check_groups("base", groups.base, n);
  check_groups("line", groups.line, n);
  if (y_band) check_length("y_band", y_band->unwrapped.size(), n);
}

CoordinateState CoordinateState::initial(std::vector<double> time, std::vector<double> values,
                                         LineGroups static_groups) {
  CoordinateState state;
  const std::size_t n = time.size();
  state.x0 = time;
  state.x = time;
  state.time = std::move(time);
  state.y0 = values;
  state.y = std::move(values);
  state.groups = std::move(static_groups);
  state.groups.wrap.assign(n, 1);
  if (state.groups.base.size() != n) state.groups.base.assign(n, 1);
  refresh_line_groups(state.groups);
  state.facet_offset.assign(n, 0.0);
  return state;
}

void refresh_line_groups(LineGroups& groups) {
  const std::size_t n = groups.series.size();
  std::set<std::tuple<int, int, int>> keys;
  for (std::size_t i = 0; i < n; ++i) {
    keys.emplace(groups.series[i], groups.base[i], groups.wrap[i]);
  }
  std::map<std::tuple<int, int, int>, int> ids;
  int next = 1;
  for (const auto& key : keys) ids.emplace(key, next++);
  groups.line.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    groups.line[i] = ids.at({groups.series[i], groups.base[i], groups.wrap[i]});
  }
}

std::size_t count_groups(const std::vector<int>& ids) {
  return std::set<int>(ids.begin(), ids.end()).size();
}

}  // namespace chronofold

namespace chronofold {

std::vector<std::pair<std::size_t, std::size_t>> segment_pairs(const CoordinateState& state) {
  const std::size_t n = state.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const int la = state.groups.line[a];
    const int lb = state.groups.line[b];
    if (la != lb) return la < lb;
    return state.time[a] < state.time[b];
  });
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n);
  for (std::size_t k = 1; k < n; ++k) {
    if (state.groups.line[order[k]] == state.groups.line[order[k - 1]]) {
      pairs.emplace_back(order[k - 1], order[k]);
    }
  }
  return pairs;
}

}  // namespace chronofold
