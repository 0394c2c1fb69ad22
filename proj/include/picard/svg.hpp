#pragma once

#include <string>

#include "picard/orbit.hpp"

namespace picard {

struct SvgConfig {
    long d = 1;
    int radius = 3;    // word-ball radius
    int density = 96;  // sample points per circle
};

/// Deterministic SVG of the orbit of the standard infinite circle under the
/// built-in Picard generator set: one polyline per circle under vertical
/// projection, straight clipped segments for the infinite circles.
std::string render_orbit_svg(const SvgConfig& config);

}  // namespace picard
