#pragma once

#include <string>

#include "chronofold/layers/layers.hpp"

namespace chronofold {

struct SvgOptions {
  int width = 640;
  int height = 320;
  int margin = 40;
  std::string brush_color = "#ffd700";
  std::string title;
};

/// Static SVG snapshot of a layer set: grid, axes, base layer, brush overlay.
/// Output is byte-stable for equal inputs.
std::string render_svg(const LayerSet& layers, const SvgOptions& options = {});

}  // namespace chronofold
