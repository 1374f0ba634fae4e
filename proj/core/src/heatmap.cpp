#include "evifuse/heatmap.hpp"

#include <algorithm>
#include <string>

namespace evifuse {

EvidenceStack accumulate_heatmaps(const std::vector<ScoredProposal>& proposals,
                                  int num_classes, int width, int height) {
    EvidenceStack out = EvidenceStack::zeros(num_classes, width, height);
    for (std::size_t i = 0; i < proposals.size(); ++i) {
        const ScoredProposal& p = proposals[i];
        require_valid(p.box, "accumulate_heatmaps");
        if (p.box.x1 > width || p.box.y1 > height) {
            throw ValidationError("accumulate_heatmaps: proposal " + std::to_string(i) +
                                  " extends outside the image");
        }
        if (static_cast<int>(p.scores.size()) != num_classes) {
            throw ValidationError("accumulate_heatmaps: proposal " + std::to_string(i) +
                                  " has " + std::to_string(p.scores.size()) + " scores, want " +
                                  std::to_string(num_classes));
        }
    }

    // One channel at a time: scatter the four difference-array corners per
    // proposal, then integrate rows with a per-column carry.
    std::vector<double> diff;
    std::vector<double> carry;
    const std::size_t dw = static_cast<std::size_t>(width) + 1;
    for (int c = 0; c < num_classes; ++c) {
        diff.assign(dw * (height + 1), 0.0);
        bool any = false;
        for (const ScoredProposal& p : proposals) {
            const double v = p.scores[c];
            if (v == 0.0) continue;
            any = true;
            diff[p.box.y0 * dw + p.box.x0] += v;
            diff[p.box.y0 * dw + p.box.x1] -= v;
            diff[p.box.y1 * dw + p.box.x0] -= v;
            diff[p.box.y1 * dw + p.box.x1] += v;
        }
        if (!any) continue;

        carry.assign(width, 0.0);
        auto plane = out.channel(c);
        for (int y = 0; y < height; ++y) {
            double run = 0.0;
            const double* row = diff.data() + y * dw;
            for (int x = 0; x < width; ++x) {
                run += row[x];
                carry[x] += run;
                plane[static_cast<std::size_t>(y) * width + x] = static_cast<float>(carry[x]);
            }
        }
    }
    return out;
}

EvidenceStack normalize_heatmaps(const EvidenceStack& raw, const ImageLabels& labels) {
    if (labels.num_classes() != raw.channels) {
        throw ValidationError("normalize_heatmaps: label vector length " +
                              std::to_string(labels.num_classes()) + " != channels " +
                              std::to_string(raw.channels));
    }
    EvidenceStack out = EvidenceStack::zeros(raw.channels, raw.width, raw.height);
    for (int c = 0; c < raw.channels; ++c) {
        if (!labels.present(c)) continue;  // absent classes stay zero
        auto src = raw.channel(c);
        const auto [mn_it, mx_it] = std::minmax_element(src.begin(), src.end());
        const float mn = *mn_it;
        const float range = *mx_it - mn;
        if (!(range > 0.0f)) continue;  // constant channel carries no evidence
        auto dst = out.channel(c);
        for (std::size_t i = 0; i < src.size(); ++i) {
            dst[i] = std::clamp((src[i] - mn) / range, 0.0f, 1.0f);
        }
    }
    return out;
}

EvidenceStack background_channel(const EvidenceStack& stack, const ImageLabels& labels) {
    if (labels.num_classes() != stack.channels) {
        throw ValidationError("background_channel: label vector length " +
                              std::to_string(labels.num_classes()) + " != channels " +
                              std::to_string(stack.channels));
    }
    EvidenceStack out = EvidenceStack::zeros(stack.channels + 1, stack.width, stack.height);
    std::copy(stack.data.begin(), stack.data.end(), out.data.begin() + out.plane());

    auto bg = out.channel(0);
    for (std::size_t i = 0; i < bg.size(); ++i) {
        double sum = 0.0;
        for (int c = 0; c < stack.channels; ++c) {
            if (labels.present(c)) sum += stack.channel(c)[i];
        }
        bg[i] = static_cast<float>(std::max(0.0, 1.0 - sum));
    }
    return out;
}

}  // namespace evifuse
