#pragma once

#include <cstdint>
#include <vector>

#include "evifuse/instances.hpp"

namespace evifuse {

// Class-score vector assigned to one instance by the external single-label
// classifier.
struct InstanceScores {
    std::int64_t instance_id = 0;
    std::vector<float> scores;
};

// Argmax class; ties break to the lowest class index. Rejects empty vectors.
int predicted_label(const InstanceScores& s);

struct RelabelResult {
    std::vector<InstanceRecord> kept;       // original labels, untouched
    std::vector<InstanceRecord> discarded;  // provenance gets a "|relabel_mismatch" tag
};

// Keep an instance iff the classifier's predicted label matches its
// original label. Requires one score vector per instance id.
RelabelResult relabel_filter(const std::vector<InstanceRecord>& instances,
                             const std::vector<InstanceScores>& scores);

}  // namespace evifuse
