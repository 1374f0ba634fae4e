#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "evifuse/errors.hpp"

namespace evifuse {

// Image-level class presence vector y.
struct ImageLabels {
    std::vector<std::uint8_t> y;

    int num_classes() const { return static_cast<int>(y.size()); }
    bool present(int c) const { return y[static_cast<std::size_t>(c)] != 0; }
    int positive_count() const;  // K
};

// Dense channel-major stack of 2D maps (heatmaps, attention, probabilities).
struct EvidenceStack {
    int channels = 0;
    int width = 0;
    int height = 0;
    std::vector<float> data;  // [channel][row][col]

    static EvidenceStack zeros(int channels, int width, int height);

    std::size_t plane() const { return static_cast<std::size_t>(width) * height; }

    float at(int c, int y, int x) const {
        return data[c * plane() + static_cast<std::size_t>(y) * width + x];
    }
    float& at(int c, int y, int x) {
        return data[c * plane() + static_cast<std::size_t>(y) * width + x];
    }

    std::span<const float> channel(int c) const {
        return {data.data() + c * plane(), plane()};
    }
    std::span<float> channel(int c) {
        return {data.data() + c * plane(), plane()};
    }

    bool same_shape(const EvidenceStack& other) const {
        return channels == other.channels && width == other.width && height == other.height;
    }
};

}  // namespace evifuse
