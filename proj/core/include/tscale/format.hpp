#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace tscale {

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double x);

/// Writes content to a sibling temporary file and renames it over path, so
/// readers never observe a partially written report.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace tscale
