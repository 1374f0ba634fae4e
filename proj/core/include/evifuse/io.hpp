#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "evifuse/errors.hpp"
#include "evifuse/evidence.hpp"
#include "evifuse/instances.hpp"
#include "evifuse/metrics.hpp"
#include "evifuse/pixelfusion.hpp"
#include "evifuse/relabel.hpp"
#include "evifuse/synth.hpp"

namespace evifuse {

// EVT tensor container: "EVT1" magic, u8 dtype (0 = f32, 1 = u16), u8 rank,
// two zero bytes, rank little-endian u32 dims, then the payload in
// little-endian channel-major row-major order. Stacks are rank 3 (C,H,W),
// label maps rank 2 (H,W) with kUncertain = 65535, matrices rank 2
// (rows,cols).
void write_evt(const std::filesystem::path& path, const EvidenceStack& stack);
EvidenceStack read_evt_stack(const std::filesystem::path& path);

void write_evt(const std::filesystem::path& path, const PixelLabelMap& map);
PixelLabelMap read_evt_labelmap(const std::filesystem::path& path);

struct EvtMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<float> data;
};
void write_evt(const std::filesystem::path& path, const EvtMatrix& matrix);
EvtMatrix read_evt_matrix(const std::filesystem::path& path);

// Line-delimited JSON records, every line carrying an explicit "schema"
// field. Readers reject unknown schemas and malformed records; writers are
// atomic (temp file + rename).

struct SceneRecord {
    std::string image;
    Scene scene;
};
void write_scenes(const std::filesystem::path& path, const std::vector<SceneRecord>& scenes);
std::vector<SceneRecord> read_scenes(const std::filesystem::path& path);

void write_proposals(const std::filesystem::path& path, const std::string& image,
                     const std::vector<ScoredProposal>& proposals);
std::vector<ScoredProposal> read_proposals(const std::filesystem::path& path);

void write_instances(const std::filesystem::path& path,
                     const std::vector<InstanceRecord>& instances);
std::vector<InstanceRecord> read_instances(const std::filesystem::path& path);

void write_instance_scores(const std::filesystem::path& path,
                           const std::vector<InstanceScores>& scores);
std::vector<InstanceScores> read_instance_scores(const std::filesystem::path& path);

void write_patches(const std::filesystem::path& path, const std::string& image,
                   const std::vector<LocalAttentionPatch>& patches);
std::vector<LocalAttentionPatch> read_patches(const std::filesystem::path& path);

void write_detections(const std::filesystem::path& path,
                      const std::vector<Detection>& detections);
std::vector<Detection> read_detections(const std::filesystem::path& path);

// Atomic small-file helpers.
void write_text_atomic(const std::filesystem::path& path, const std::string& content);
std::string read_text(const std::filesystem::path& path);

}  // namespace evifuse
