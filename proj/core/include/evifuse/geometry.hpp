#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "evifuse/errors.hpp"

namespace evifuse {

// Half-open integer pixel rectangle [x0,x1) x [y0,y1).
struct Box {
    int x0 = 0;
    int y0 = 0;
    int x1 = 0;
    int y1 = 0;

    int width() const { return x1 - x0; }
    int height() const { return y1 - y0; }
    bool valid() const { return x0 >= 0 && y0 >= 0 && x0 < x1 && y0 < y1; }
    bool contains(const Box& inner) const {
        return x0 <= inner.x0 && y0 <= inner.y0 && inner.x1 <= x1 && inner.y1 <= y1;
    }

    friend bool operator==(const Box&, const Box&) = default;
};

void require_valid(const Box& b, const char* what);

std::int64_t area(const Box& b);

// Bounding box of the pair.
Box union_box(const Box& a, const Box& b);

// Empty when the rectangles are disjoint.
std::optional<Box> intersect(const Box& a, const Box& b);

double iou(const Box& a, const Box& b);

// Fraction of h covered by a: area(a ∩ h) / area(h).
double coverage(const Box& a, const Box& h);

struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;  // row-major, nonzero = true

    static BinaryMask zeros(int width, int height);
    bool at(int y, int x) const { return data[static_cast<std::size_t>(y) * width + x] != 0; }
    void set(int y, int x, bool v) { data[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0; }
};

// Horizontal run of pixels: row y, columns [x0, x1).
struct PixelRun {
    int y = 0;
    int x0 = 0;
    int x1 = 0;

    friend bool operator==(const PixelRun&, const PixelRun&) = default;
};

struct Component {
    std::vector<PixelRun> runs;  // sorted by (y, x0)
    Box bbox;
    std::int64_t pixel_count = 0;
};

// Maximal 4-connected regions of true pixels, ordered by (bbox.y0, bbox.x0).
std::vector<Component> connected_components(const BinaryMask& mask);

}  // namespace evifuse
