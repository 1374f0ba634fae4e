#pragma once

#include <optional>
#include <span>
#include <vector>

#include "evifuse/evidence.hpp"
#include "evifuse/geometry.hpp"
#include "evifuse/instances.hpp"

namespace evifuse {

struct FusionThresholds {
    double tau_high = 0.65;   // heatmap high-confidence level
    double tau_low = 0.1;     // heatmap low-confidence level
    double tau_att = 0.5;     // attention level
    double tau_cover = 0.5;   // required fraction of a high box covered
};

// Per-class proposal triple extracted from thresholded maps.
struct ClassProposals {
    int class_id = 0;
    std::vector<Box> r_high;
    std::vector<Box> r_low;
    std::vector<Box> r_att;
};

// Bounding boxes of the 4-connected components of {p : map(p) >= tau},
// in component order (bbox min-y, then min-x).
std::vector<Box> threshold_to_boxes(std::span<const float> map, int width, int height,
                                    double tau);

// Grow an attention box to enclose its matched high box, then clip to the
// matched low box. Empty result means the clip removed everything.
std::optional<Box> fuse_adjust(const Box& att, const Box& high, const Box& low);

struct FuseResult {
    std::vector<InstanceRecord> instances;
    int dropped_empty = 0;  // adjustments with an empty clip, dropped with a warning
};

// Keep attention boxes that cover more than tau_cover of their best high
// box; adjust each against the best-matching low box; dedupe identical
// output boxes.
FuseResult fuse_class(const ClassProposals& proposals, const FusionThresholds& t);

// Threshold the per-class heatmap (tau_high, tau_low) and attention
// (tau_att) channels of the present classes and fuse each class.
FuseResult fuse_image(const EvidenceStack& heatmaps, const EvidenceStack& attention,
                      const ImageLabels& labels, const FusionThresholds& t);

}  // namespace evifuse
