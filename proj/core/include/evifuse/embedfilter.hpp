#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "evifuse/embedding.hpp"
#include "evifuse/instances.hpp"

namespace evifuse {

struct FilterResult {
    std::vector<InstanceRecord> kept;
    std::vector<InstanceRecord> removed;  // provenance gets a "|cluster_outlier" tag
    std::map<int, ClusterResult> clusters;  // per class id
};

// Cluster each class independently and drop the instances outside the
// cluster. Every instance must carry an embedding. A class with a single
// instance keeps it.
FilterResult filter_instances(const std::vector<InstanceRecord>& instances, double lambda_d);

struct TripletBatchConfig {
    int classes_per_batch = 2;   // b
    int instances_per_class = 2; // a
    std::uint64_t seed = 0;
};

// Mini-batches of instance indices for external metric-learning training:
// each batch draws b distinct classes, then a instances per class (with
// replacement when the class is smaller than a). Deterministic under the
// seed. Emits ceil(n / (b*a)) batches.
std::vector<std::vector<std::size_t>> compose_triplet_batches(
    const std::vector<InstanceRecord>& instances, const TripletBatchConfig& cfg);

}  // namespace evifuse
