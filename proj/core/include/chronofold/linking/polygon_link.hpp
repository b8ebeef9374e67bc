#pragma once

#include <cstddef>
#include <vector>

#include "chronofold/layers/layers.hpp"

namespace chronofold {

/// Polygons (indices into layers.areas) whose source is `point`.
std::vector<std::size_t> polygons_of_point(const LayerSet& layers, std::size_t point);

/// Source point of polygon `k`. Throws LinkError when `k` is out of range
/// or the polygon has no source point.
std::size_t source_of_polygon(const LayerSet& layers, std::size_t k);

}  // namespace chronofold
