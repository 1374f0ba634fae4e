#include "evifuse/fusion.hpp"

#include <algorithm>
#include <string>

namespace evifuse {

std::vector<Box> threshold_to_boxes(std::span<const float> map, int width, int height,
                                    double tau) {
    if (map.size() != static_cast<std::size_t>(width) * height) {
        throw ValidationError("threshold_to_boxes: map length != width*height");
    }
    BinaryMask mask = BinaryMask::zeros(width, height);
    for (std::size_t i = 0; i < map.size(); ++i) {
        mask.data[i] = map[i] >= tau ? 1 : 0;
    }
    std::vector<Box> boxes;
    for (const Component& c : connected_components(mask)) {
        boxes.push_back(c.bbox);
    }
    return boxes;
}

std::optional<Box> fuse_adjust(const Box& att, const Box& high, const Box& low) {
    return intersect(union_box(att, high), low);
}

FuseResult fuse_class(const ClassProposals& proposals, const FusionThresholds& t) {
    FuseResult out;
    for (const Box& att : proposals.r_att) {
        // Best high box by covered fraction; first maximum wins.
        int best_high = -1;
        double best_cov = -1.0;
        for (std::size_t i = 0; i < proposals.r_high.size(); ++i) {
            const double c = coverage(att, proposals.r_high[i]);
            if (c > best_cov) {
                best_cov = c;
                best_high = static_cast<int>(i);
            }
        }
        if (best_high < 0 || !(best_cov > t.tau_cover)) continue;
        const Box& high = proposals.r_high[best_high];

        // Matched low box by IoU with the high box.
        int best_low = -1;
        double best_iou = -1.0;
        for (std::size_t i = 0; i < proposals.r_low.size(); ++i) {
            const double v = iou(high, proposals.r_low[i]);
            if (v > best_iou) {
                best_iou = v;
                best_low = static_cast<int>(i);
            }
        }
        if (best_low < 0) continue;

        auto adjusted = fuse_adjust(att, high, proposals.r_low[best_low]);
        if (!adjusted) {
            ++out.dropped_empty;
            continue;
        }

        bool duplicate = false;
        for (const InstanceRecord& r : out.instances) {
            if (r.box == *adjusted) {
                duplicate = true;
                break;
            }
        }
        if (duplicate) continue;

        InstanceRecord rec;
        rec.box = *adjusted;
        rec.class_id = proposals.class_id;
        rec.provenance = "fusion";
        out.instances.push_back(std::move(rec));
    }
    return out;
}

FuseResult fuse_image(const EvidenceStack& heatmaps, const EvidenceStack& attention,
                      const ImageLabels& labels, const FusionThresholds& t) {
    if (!heatmaps.same_shape(attention)) {
        throw ValidationError("fuse_image: heatmap and attention stacks differ in shape");
    }
    if (labels.num_classes() != heatmaps.channels) {
        throw ValidationError("fuse_image: label vector length != stack channels");
    }

    FuseResult out;
    for (int c = 0; c < heatmaps.channels; ++c) {
        if (!labels.present(c)) continue;
        ClassProposals p;
        p.class_id = c;
        p.r_high = threshold_to_boxes(heatmaps.channel(c), heatmaps.width, heatmaps.height,
                                      t.tau_high);
        p.r_low = threshold_to_boxes(heatmaps.channel(c), heatmaps.width, heatmaps.height,
                                     t.tau_low);
        p.r_att = threshold_to_boxes(attention.channel(c), attention.width, attention.height,
                                     t.tau_att);
        FuseResult per_class = fuse_class(p, t);
        out.dropped_empty += per_class.dropped_empty;
        for (InstanceRecord& r : per_class.instances) {
            out.instances.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace evifuse
