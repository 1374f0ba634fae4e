#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "evifuse/anchors.hpp"
#include "evifuse/embedfilter.hpp"
#include "evifuse/fusion.hpp"
#include "evifuse/metrics.hpp"
#include "evifuse/synth.hpp"

namespace evifuse {

struct SynthSection {
    int images = 8;
    SceneConfig scene;
    NoiseConfig noise;  // noise.seed is derived from the pipeline seed
};

struct TripletSection {
    int classes_per_batch = 2;
    int instances_per_class = 4;
};

// Every tunable of the pipeline; defaults are the reference constants
// (0.65/0.1/0.5/0.5 fusion levels, lambda_d 0.8, tau 0.6, stride 8).
struct PipelineConfig {
    AnchorConfig anchors;
    FusionThresholds fusion;
    double lambda_d = 0.8;
    double tau_uncertain = 0.6;
    ApInterpolation ap_interpolation = ApInterpolation::continuous;
    std::uint64_t seed = 0;
    SynthSection synth;
    std::optional<TripletSection> triplet;
};

// Strict JSON parse: unknown keys anywhere are a ValidationError.
PipelineConfig parse_config(const std::string& json_text);
std::string serialize_config(const PipelineConfig& cfg);

PipelineConfig load_config(const std::filesystem::path& path);
void save_config(const std::filesystem::path& path, const PipelineConfig& cfg);

}  // namespace evifuse
