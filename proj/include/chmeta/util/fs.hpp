#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace chmeta::fsutil {

/// Whole-file read; throws Error(IoError) when the file cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// Writes via a sibling temp file and rename so readers never see a torn file.
void write_file(const std::filesystem::path& path, std::string_view contents);

void append_file(const std::filesystem::path& path, std::string_view contents);

/// 64-bit FNV-1a, used for change fingerprints.
std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL) noexcept;

std::string hex64(std::uint64_t value);

/// `2026-10-16T08:30:00Z`
std::string format_utc(std::chrono::system_clock::time_point tp);

}  // namespace chmeta::fsutil
