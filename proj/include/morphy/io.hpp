#pragma once

#include <string>
#include <string_view>

namespace morphy::io {

/// Whole file as bytes; throws std::runtime_error when it cannot be opened.
std::string read_file(const std::string& path);

/// Writes through a temporary sibling and renames it into place.
void write_file_atomic(const std::string& path, std::string_view content);

}  // namespace morphy::io
