#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace swim {

// Shortest round-trip form, with "inf"/"nan" for non-finite values.
std::string format_value(double v);

void write_file(const std::filesystem::path& path, std::string_view content);
std::string read_file(const std::filesystem::path& path);

} // namespace swim
