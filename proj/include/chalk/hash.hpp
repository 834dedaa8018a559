#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace chalk {

/// SHA-256 of a byte string, hex-encoded.
std::string sha256_hex(std::string_view data);

/// SHA-256 of a file's contents, hex-encoded.
std::string sha256_file_hex(const std::filesystem::path& path);

}  // namespace chalk
