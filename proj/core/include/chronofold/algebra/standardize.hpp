#pragma once

#include <span>
#include <vector>

namespace chronofold {

/// Per-group min-max rescale to [0, 1]; a constant group maps to 0.5.
std::vector<double> standardize_lines(std::span<const double> y, std::span<const int> groups);

}  // namespace chronofold
