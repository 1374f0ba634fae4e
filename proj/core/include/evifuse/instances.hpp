#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "evifuse/embedding.hpp"
#include "evifuse/geometry.hpp"

namespace evifuse {

// A harvested object instance. Class ids are 0-based; pixel label maps use
// value class_id + 1 (0 is background).
struct InstanceRecord {
    std::int64_t id = 0;
    std::string image;
    Box box;
    int class_id = 0;
    std::string provenance;
    std::optional<Embedding> embedding;
    std::optional<std::vector<float>> scores;
};

}  // namespace evifuse
