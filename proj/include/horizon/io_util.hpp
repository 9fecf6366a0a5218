#pragma once

#include <filesystem>
#include <string>

namespace horizon {

/// Formats a double with the shortest digits that round-trip exactly.
std::string format_double(double v);

/// Whole-file read. Throws std::runtime_error on failure.
std::string read_file(const std::filesystem::path& path);

/// Writes via a sibling temp file and a rename, so readers never observe a
/// partial file. Throws std::runtime_error on failure.
void atomic_write_file(const std::filesystem::path& path, const std::string& bytes);

} // namespace horizon
