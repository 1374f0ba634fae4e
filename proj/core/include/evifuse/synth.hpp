#pragma once

#include <cstdint>
#include <vector>

#include "evifuse/evidence.hpp"
#include "evifuse/geometry.hpp"
#include "evifuse/heatmap.hpp"
#include "evifuse/instances.hpp"
#include "evifuse/pixelfusion.hpp"

namespace evifuse {

struct SceneObject {
    int class_id = 0;
    Box box;
};

// Ground-truth scene: axis-aligned objects on a background canvas. Later
// objects occlude earlier ones in the pixel map.
struct Scene {
    int width = 0;
    int height = 0;
    std::vector<SceneObject> objects;
    ImageLabels labels;

    PixelLabelMap ground_truth_labels() const;
};

struct SceneConfig {
    int num_classes = 8;
    int width = 128;
    int height = 128;
    int min_objects = 1;
    int max_objects = 3;
    int min_size = 24;
    int max_size = 56;
    int margin = 12;            // minimum separation between object boxes
    int classes_per_scene = 0;  // 0 = unconstrained
};

// Deterministic under seed. Objects are placed by rejection sampling with
// the configured margin; placements that fail repeatedly are skipped, but
// the first object always lands.
Scene generate_scene(std::uint64_t seed, const SceneConfig& cfg);

struct NoiseConfig {
    double score_noise = 0.0;   // sigma on proposal scores
    int blur_radius = 0;        // box-blur radius on attention
    double shrink = 1.0;        // fraction of each box rendered hot
    double embed_noise = 0.0;   // sigma on embedding coordinates
    double outlier_rate = 0.0;  // probability of planting an embedding outlier
    std::uint64_t seed = 0;
};

// Simulated detector: score for class c = clamp(max IoU against class-c
// ground truth + gaussian noise, 0, 1).
std::vector<ScoredProposal> render_proposal_scores(const Scene& scene,
                                                   const std::vector<Box>& proposals,
                                                   const NoiseConfig& noise);

struct AttentionRender {
    EvidenceStack global;                     // C x H x W, normalized to [0,1]
    std::vector<LocalAttentionPatch> patches; // one per scene object
};

// Simulated attention: per object a centered sub-box scaled by shrink,
// value 1, box-blurred; the global map is the per-class max over objects,
// normalized like heatmaps.
AttentionRender render_attention(const Scene& scene, const NoiseConfig& noise);

struct EmbeddingRender {
    std::vector<Embedding> embeddings;  // one per instance, unit norm
    std::vector<std::uint8_t> planted;  // 1 where an outlier was substituted
};

// Simulated metric-learning features: fixed orthogonal per-class centroids
// plus gaussian noise; with probability outlier_rate an instance is
// replaced by a unit vector far (>= 2*lambda_d when the dimension permits,
// else sqrt(2)) from every class centroid.
EmbeddingRender render_embeddings(const std::vector<InstanceRecord>& instances,
                                  const Scene& scene, const NoiseConfig& noise);

}  // namespace evifuse
