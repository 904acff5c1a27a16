#pragma once

#include <string>

namespace rcc {

std::string read_file(const std::string& path);

// Writes to <path>.tmp and renames into place, so a failed run never leaves
// a partially written file at the target path.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace rcc
