#include "evifuse/evidence.hpp"

#include <string>

namespace evifuse {

int ImageLabels::positive_count() const {
    int k = 0;
    for (auto v : y) k += v != 0;
    return k;
}

EvidenceStack EvidenceStack::zeros(int channels, int width, int height) {
    if (channels < 1 || width < 1 || height < 1) {
        throw ValidationError("EvidenceStack: non-positive shape " + std::to_string(channels) +
                              "x" + std::to_string(height) + "x" + std::to_string(width));
    }
    EvidenceStack s;
    s.channels = channels;
    s.width = width;
    s.height = height;
    s.data.assign(static_cast<std::size_t>(channels) * width * height, 0.0f);
    return s;
}

}  // namespace evifuse
