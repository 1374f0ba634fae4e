#pragma once

#include <vector>

#include "evifuse/geometry.hpp"

namespace evifuse {

struct AnchorConfig {
    int stride = 8;
    // Window scales as fractions of the image short side.
    std::vector<double> scale_fractions = {0.125, 0.25, 0.5, 1.0};
    std::vector<double> aspect_ratios = {0.5, 1.0, 2.0};
};

// Dense sliding-window proposals. One window per (grid cell, scale, ratio),
// centered at ((i+0.5)*stride, (j+0.5)*stride) with area-preserving shape
// w = round(s/sqrt(r)), h = round(s*sqrt(r)). Windows that extend past the
// image border are dropped, not clipped. Output order is location-major
// (rows, then columns), then scale, then ratio.
std::vector<Box> generate_anchors(int width, int height, const AnchorConfig& cfg);

}  // namespace evifuse
