#include "chronofold/algebra/facet.hpp"

#include <algorithm>
#include <cmath>

#include "chronofold/model/errors.hpp"

namespace chronofold {

namespace {

int max_group(const std::vector<int>& groups) {
  return groups.empty() ? 1 : *std::max_element(groups.begin(), groups.end());
}

void require_step(double step) {
  if (!(step > 0.0 && step < 1.0)) {
    throw InteractionError("facet step must lie in (0, 1)");
  }
}

Movement vertical(std::vector<double> dy) {
  Movement m;
  m.dx.assign(dy.size(), 0.0);
  m.dy = std::move(dy);
  return m;
}

}  // namespace

int facet_full_split(double step) {
  require_step(step);
  // Tolerance keeps 1/0.05 at 20 rather than 21 after rounding.
  return static_cast<int>(std::ceil(1.0 / step - 1e-9));
}

double facet_fraction(int j, double step) {
  if (j <= 0) return 0.0;
  if (j >= facet_full_split(step)) return 1.0;
  return step * j;
}

std::vector<double> facet_offsets(std::span<const FacetDimension> outer_to_inner) {
  if (outer_to_inner.empty()) return {};
  const std::size_t n = outer_to_inner.front().groups.size();
  std::vector<double> offsets(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double scale = 1.0;
    double offset = 0.0;
    for (auto it = outer_to_inner.rbegin(); it != outer_to_inner.rend(); ++it) {
      offset += (it->groups[i] - 1) * it->fraction * scale;
      scale *= 1.0 + it->fraction * (it->count - 1);
    }
    offsets[i] = offset;
  }
  return offsets;
}

std::vector<int> facet_groups(const LineGroups& groups, FacetGrouping grouping) {
  switch (grouping) {
    case FacetGrouping::individual:
      return groups.individual;
    case FacetGrouping::period:
      return groups.wrap;
    case FacetGrouping::variable: {
      const int periods = max_group(groups.wrap);
      std::vector<int> out(groups.variable.size());
      for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = (groups.variable[i] - 1) * periods + groups.wrap[i];
      }
      return out;
    }
  }
  return {};
}

Movement facet_individual_step(const CoordinateState& state, int j, double step) {
  require_step(step);
  const double f = facet_fraction(j, step);
  std::vector<double> dy(state.size());
  for (std::size_t i = 0; i < dy.size(); ++i) dy[i] = f * (state.groups.individual[i] - 1);
  return vertical(std::move(dy));
}

Movement facet_variable(const CoordinateState& state) {
  const std::vector<int> groups = facet_groups(state.groups, FacetGrouping::variable);
  std::vector<double> dy(groups.size());
  for (std::size_t i = 0; i < dy.size(); ++i) dy[i] = groups[i] - 1;
  return vertical(std::move(dy));
}

Movement facet_period(const CoordinateState& state) {
  std::vector<double> dy(state.size());
  for (std::size_t i = 0; i < dy.size(); ++i) dy[i] = state.groups.wrap[i] - 1;
  return vertical(std::move(dy));
}

Movement facet_compose(const CoordinateState& state, FacetGrouping outer, FacetGrouping inner) {
  std::vector<FacetDimension> dims(2);
  dims[0].groups = facet_groups(state.groups, outer);
  dims[0].count = max_group(dims[0].groups);
  dims[1].groups = facet_groups(state.groups, inner);
  dims[1].count = max_group(dims[1].groups);
  return vertical(facet_offsets(dims));
}

}  // namespace chronofold
