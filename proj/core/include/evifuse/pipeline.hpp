#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evifuse/config.hpp"

namespace evifuse {

enum class Stage {
    anchors,
    heatmap,
    fuse,
    cluster,
    relabel,
    pixels,
    harvest,
    eval,
    synth,
    all,
};

std::optional<Stage> parse_stage(std::string_view name);
std::string stage_name(Stage stage);

struct StageReport {
    std::string stage;
    std::map<std::string, std::int64_t> counts;
    std::map<std::string, double> values;
    std::vector<std::string> warnings;
    std::map<std::string, double> timings_ms;

    std::string to_json() const;
};

// Runs one stage (or the whole chain) over a dataset directory and writes
// <out>/report.json. Throws ValidationError / IoError on bad inputs.
StageReport run_stage(Stage stage, const PipelineConfig& cfg,
                      const std::filesystem::path& in_dir,
                      const std::filesystem::path& out_dir);

}  // namespace evifuse
