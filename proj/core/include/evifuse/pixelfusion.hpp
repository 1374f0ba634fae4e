#pragma once

#include <cstdint>
#include <vector>

#include "evifuse/evidence.hpp"
#include "evifuse/geometry.hpp"

namespace evifuse {

// Box-local attention map for one instance, from the external instance
// classifier. values is box.height() rows of box.width(), row-major, >= 0.
struct LocalAttentionPatch {
    std::int64_t instance_id = 0;
    int class_id = 0;
    Box box;
    std::vector<float> values;
};

// Paint every patch into its box region on its class channel, then
// normalize channels the same way object heatmaps are normalized.
EvidenceStack instance_attention(const std::vector<LocalAttentionPatch>& patches,
                                 int num_classes, int width, int height);

// Pixelwise, channelwise maximum of the two stacks.
EvidenceStack combine_attention(const EvidenceStack& local, const EvidenceStack& global);

// (C+1)-channel per-pixel class probabilities; channels outside the active
// set (background + present classes) are exactly zero.
struct ProbabilityMap {
    EvidenceStack p;
    std::vector<std::uint8_t> active;  // per channel
};

// P = softmax(softmax(H) ⊙ softmax(A)) along the channel axis, restricted
// to the active channels. Both inputs must already carry the background
// channel.
ProbabilityMap probability_map(const EvidenceStack& heatmaps, const EvidenceStack& attention,
                               const ImageLabels& labels);

// H*W labels over {0=background, 1..C} plus kUncertain.
struct PixelLabelMap {
    static constexpr std::uint16_t kUncertain = 65535;

    int width = 0;
    int height = 0;
    std::vector<std::uint16_t> data;

    static PixelLabelMap filled(int width, int height, std::uint16_t value);
    std::uint16_t at(int y, int x) const {
        return data[static_cast<std::size_t>(y) * width + x];
    }
    std::uint16_t& at(int y, int x) {
        return data[static_cast<std::size_t>(y) * width + x];
    }
};

// Label each pixel with its argmax active channel when the maximum
// probability strictly exceeds tau_u, else kUncertain. Argmax ties break to
// the lowest channel index.
PixelLabelMap label_with_uncertainty(const ProbabilityMap& prob, double tau_u = 0.6);

}  // namespace evifuse
