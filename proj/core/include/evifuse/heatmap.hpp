#pragma once

#include <vector>

#include "evifuse/evidence.hpp"
#include "evifuse/geometry.hpp"

namespace evifuse {

// A rectangle with the class-probability vector assigned to it by the
// external detector.
struct ScoredProposal {
    Box box;
    std::vector<float> scores;  // length C, each in [0,1]
};

// Sum every proposal's score vector over all pixels inside its window.
// Runs on a per-channel 2D difference array + prefix sum, O(C*(H*W) + n*C);
// the naive per-pixel painter lives in the test oracles only.
EvidenceStack accumulate_heatmaps(const std::vector<ScoredProposal>& proposals,
                                  int num_classes, int width, int height);

// Min-shift then divide by the shifted max so present-class channels span
// exactly [0,1]. Absent-class channels and constant channels become zeros.
EvidenceStack normalize_heatmaps(const EvidenceStack& raw, const ImageLabels& labels);

// Prepend channel 0 = max(0, 1 - sum over present-class channels).
EvidenceStack background_channel(const EvidenceStack& stack, const ImageLabels& labels);

}  // namespace evifuse
