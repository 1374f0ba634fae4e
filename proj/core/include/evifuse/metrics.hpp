#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "evifuse/geometry.hpp"
#include "evifuse/instances.hpp"
#include "evifuse/pixelfusion.hpp"

namespace evifuse {

struct Detection {
    std::string image;
    Box box;
    int class_id = 0;
    double confidence = 0.0;
};

struct GtObject {
    Box box;
    int class_id = 0;
};

struct GroundTruth {
    std::map<std::string, std::vector<GtObject>> objects;  // per image id
};

// One instance per 4-connected component of each non-background class;
// uncertain pixels are ignored.
std::vector<InstanceRecord> boxes_from_labelmap(const PixelLabelMap& map);

// Per-class intersection-over-union between the two label maps, indexed by
// label value 0..C. Classes absent from both maps are nullopt and skipped
// by the mean. With exclude_uncertain, pixels predicted kUncertain drop out
// of every count; otherwise they count as mismatches.
struct IouReport {
    std::vector<std::optional<double>> per_class;
    double mean = 0.0;
};
IouReport miou(const PixelLabelMap& pred, const PixelLabelMap& gt, int num_classes,
               bool exclude_uncertain);

// Per-class ratios indexed by class id; classes with no positive images /
// no ground truth are nullopt and skipped by the mean.
struct ClassRatioReport {
    std::vector<std::optional<double>> per_class;
    double mean = 0.0;
};

// Fraction of class-positive images whose single highest-confidence
// detection of that class overlaps some ground-truth box at IoU >= thresh.
ClassRatioReport corloc(const std::vector<Detection>& detections, const GroundTruth& gt,
                        int num_classes, double iou_thresh = 0.5);

enum class ApInterpolation {
    continuous,    // all-points precision envelope
    eleven_point,  // legacy 11-point variant
};

// Pascal-VOC style average precision with greedy confidence-ordered
// matching against unmatched ground truth.
ClassRatioReport voc_map(const std::vector<Detection>& detections, const GroundTruth& gt,
                         int num_classes, double iou_thresh = 0.5,
                         ApInterpolation interp = ApInterpolation::continuous);

// Macro (per-class averaged) and micro (pooled) precision/recall/F1 over
// multi-label score vectors. Positive = score strictly above conf_thresh,
// optionally intersected with each image's top-k scores.
struct PrfReport {
    double p_c = 0.0;
    double r_c = 0.0;
    double f1_c = 0.0;
    double p_o = 0.0;
    double r_o = 0.0;
    double f1_o = 0.0;
};
PrfReport multilabel_prf(const std::vector<std::vector<double>>& scores,
                         const std::vector<std::vector<std::uint8_t>>& gts,
                         double conf_thresh = 0.5,
                         std::optional<int> topk = std::nullopt);

}  // namespace evifuse
