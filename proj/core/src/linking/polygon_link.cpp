#include "chronofold/linking/polygon_link.hpp"

#include <string>

#include "chronofold/model/errors.hpp"

namespace chronofold {

std::vector<std::size_t> polygons_of_point(const LayerSet& layers, std::size_t point) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < layers.areas.size(); ++k) {
    if (layers.areas[k].source_point == point) out.push_back(k);
  }
  return out;
}

std::size_t source_of_polygon(const LayerSet& layers, std::size_t k) {
  if (k >= layers.areas.size()) {
    throw LinkError("polygon " + std::to_string(k) + " does not exist");
  }
  const auto& source = layers.areas[k].source_point;
  if (!source) throw LinkError("polygon " + std::to_string(k) + " has no source point");
  return *source;
}

}  // namespace chronofold
