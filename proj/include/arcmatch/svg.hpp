#pragma once

#include <span>
#include <string>

#include "arcmatch/core.hpp"

namespace arcmatch {

// Arc diagram: vertices on a baseline 40px apart, one upper semicircle per
// edge with radius (right - left) / 2 units. Highlighted edges are drawn in
// a separate, coloured group. Output is byte-deterministic.
std::string render_svg(const Matching& m, std::span<const Edge> highlight = {});

}  // namespace arcmatch
