#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "chronofold/algebra/movement.hpp"
#include "chronofold/model/coordinate_state.hpp"

namespace chronofold {

inline constexpr double kDefaultFacetStep = 0.05;

enum class FacetGrouping { variable, individual, period };

/// One level of a nested facet layout.
struct FacetDimension {
  std::vector<int> groups;  // l, 1-based
  int count = 1;            // max(l)
  double fraction = 1.0;    // 1 once fully split
};

/// Keystrokes needed for a full split: ceil(1/step).
int facet_full_split(double step);
/// Split progress after j keystrokes: step·j, or 1 once j >= ceil(1/step).
double facet_fraction(int j, double step);

/// Vertical offset of each point for facet levels listed outer to inner:
/// Σ_k (l_k - 1) f_k Π_{m>k} (1 + f_m (K_m - 1)).
std::vector<double> facet_offsets(std::span<const FacetDimension> outer_to_inner);

/// Group vector used by each grouping. Variable faceting nests the wrap
/// period inside the variable so it doubles as facet-by-period.
std::vector<int> facet_groups(const LineGroups& groups, FacetGrouping grouping);

/// Lift of the l-th individual after j keystrokes. Throws InteractionError
/// unless 0 < step < 1.
Movement facet_individual_step(const CoordinateState& state, int j,
                               double step = kDefaultFacetStep);
Movement facet_variable(const CoordinateState& state);
Movement facet_period(const CoordinateState& state);

/// Fully split nested facet: dy = (l_outer - 1) max(l_inner) + (l_inner - 1).
Movement facet_compose(const CoordinateState& state, FacetGrouping outer, FacetGrouping inner);

}  // namespace chronofold
