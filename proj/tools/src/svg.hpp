#pragma once

// SVG rendering of the tiling, colored by color_of(tile center).

#include <array>
#include <string>

#include "mchroma/scheme.hpp"
#include "run_config.hpp"

namespace mchroma::cli {

struct RenderOptions {
  Viewport viewport;
  double scale = 40.0;
  std::array<std::string, 6> palette;
  bool sums = false;     ///< C/2 + H outlines at points of L'
  bool lines = false;    ///< published separating lines, when the scheme has them
  bool lattice = false;  ///< v1, v2 arrows and L' points
};

/// Throws std::invalid_argument for an empty or non-finite viewport.
std::string render_svg(const ColoringScheme& scheme, const RenderOptions& opt);

}  // namespace mchroma::cli
