#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace unipy::io {

inline constexpr std::string_view kUtf8Bom = "\xEF\xBB\xBF";

/// Whole file as bytes. Throws IoError.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

/// Removes a leading UTF-8 byte-order mark; returns whether one was present.
bool strip_bom(std::string& text);

}  // namespace unipy::io
