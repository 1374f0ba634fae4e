#include "evifuse/anchors.hpp"

#include <cmath>
#include <string>

namespace evifuse {

namespace {

void validate(int width, int height, const AnchorConfig& cfg) {
    if (cfg.stride < 1) throw ValidationError("generate_anchors: stride must be >= 1");
    if (width < cfg.stride || height < cfg.stride) {
        throw ValidationError("generate_anchors: image " + std::to_string(width) + "x" +
                              std::to_string(height) + " smaller than stride " +
                              std::to_string(cfg.stride));
    }
    if (cfg.scale_fractions.empty() || cfg.aspect_ratios.empty()) {
        throw ValidationError("generate_anchors: empty scale or ratio list");
    }
    for (double f : cfg.scale_fractions) {
        if (!(f > 0.0) || f > 1.0) {
            throw ValidationError("generate_anchors: scale fraction out of (0,1]");
        }
    }
    for (double r : cfg.aspect_ratios) {
        if (!(r > 0.0)) throw ValidationError("generate_anchors: aspect ratio must be > 0");
    }
}

}  // namespace

std::vector<Box> generate_anchors(int width, int height, const AnchorConfig& cfg) {
    validate(width, height, cfg);

    const int short_side = std::min(width, height);
    const int grid_w = width / cfg.stride;
    const int grid_h = height / cfg.stride;

    // Window shapes are location independent; precompute them.
    struct Shape {
        int w, h;
    };
    std::vector<Shape> shapes;
    shapes.reserve(cfg.scale_fractions.size() * cfg.aspect_ratios.size());
    for (double f : cfg.scale_fractions) {
        const double s = std::round(f * short_side);
        for (double r : cfg.aspect_ratios) {
            const double sq = std::sqrt(r);
            shapes.push_back({static_cast<int>(std::lround(s / sq)),
                              static_cast<int>(std::lround(s * sq))});
        }
    }

    std::vector<Box> out;
    for (int j = 0; j < grid_h; ++j) {
        const double cy = (j + 0.5) * cfg.stride;
        for (int i = 0; i < grid_w; ++i) {
            const double cx = (i + 0.5) * cfg.stride;
            for (const Shape& s : shapes) {
                if (s.w < 1 || s.h < 1) continue;
                const int x0 = static_cast<int>(std::lround(cx - 0.5 * s.w));
                const int y0 = static_cast<int>(std::lround(cy - 0.5 * s.h));
                const int x1 = x0 + s.w;
                const int y1 = y0 + s.h;
                if (x0 < 0 || y0 < 0 || x1 > width || y1 > height) continue;
                out.push_back({x0, y0, x1, y1});
            }
        }
    }
    return out;
}

}  // namespace evifuse
