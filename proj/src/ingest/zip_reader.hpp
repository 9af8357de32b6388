#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace chmeta::detail {

/// Read-only view of a ZIP archive held in memory. Handles stored and
/// deflated members, which is all Office Open XML producers emit. No ZIP64.
class ZipReader {
public:
    /// Throws Error(UnreadableFile) when the central directory is unusable.
    explicit ZipReader(std::string archive);

    bool contains(std::string_view name) const { return entries_.count(std::string(name)) != 0; }

    /// Inflated member bytes, or nullopt when the member is absent.
    std::optional<std::string> read(std::string_view name) const;

private:
    struct Entry {
        std::uint16_t method = 0;
        std::uint32_t compressed_size = 0;
        std::uint32_t uncompressed_size = 0;
        std::uint32_t local_header_offset = 0;
    };

    std::string data_;
    std::map<std::string, Entry, std::less<>> entries_;
};

}  // namespace chmeta::detail
