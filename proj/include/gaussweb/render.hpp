#pragma once

#include <string>

#include "gaussweb/webtrace.hpp"

namespace gaussweb {

/// SVG figure of a traced web on a fixed 1000x1000 frame: the disc of
/// radius R maps to the circle of radius 450 centered at (500, 500).
std::string render_svg(const Web& web);

}  // namespace gaussweb
