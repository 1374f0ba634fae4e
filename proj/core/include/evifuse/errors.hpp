#pragma once

#include <stdexcept>
#include <string>

namespace evifuse {

// Content-level failure: bad geometry, mismatched shapes, malformed records.
// The CLI maps this to exit code 1.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem-level failure: missing path, short read, failed write.
// The CLI maps this to exit code 2.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace evifuse
