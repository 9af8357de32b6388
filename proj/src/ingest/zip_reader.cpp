#include "zip_reader.hpp"

#include <cstdint>
#include <cstring>

#include <zlib.h>

#include "chmeta/error.hpp"

namespace chmeta::detail {

namespace {

constexpr std::uint32_t kEndOfCentralDir = 0x06054b50;
constexpr std::uint32_t kCentralHeader = 0x02014b50;
constexpr std::uint32_t kLocalHeader = 0x04034b50;

[[noreturn]] void corrupt(const std::string& why) {
    throw Error(Errc::UnreadableFile, "zip archive: " + why);
}

std::uint32_t u32(std::string_view d, std::size_t at) {
    if (at + 4 > d.size())
        corrupt("truncated");
    const auto* p = reinterpret_cast<const unsigned char*>(d.data() + at);
    return p[0] | (p[1] << 8) | (p[2] << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t u16(std::string_view d, std::size_t at) {
    if (at + 2 > d.size())
        corrupt("truncated");
    const auto* p = reinterpret_cast<const unsigned char*>(d.data() + at);
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

}  // namespace

ZipReader::ZipReader(std::string archive) : data_(std::move(archive)) {
    const std::string_view d = data_;
    if (d.size() < 22)
        corrupt("too small");

    std::size_t eocd = std::string_view::npos;
    const std::size_t lowest = d.size() > 22 + 0xFFFF ? d.size() - 22 - 0xFFFF : 0;
    for (std::size_t at = d.size() - 22 + 1; at-- > lowest;) {
        if (u32(d, at) == kEndOfCentralDir) {
            eocd = at;
            break;
        }
    }
    if (eocd == std::string_view::npos)
        corrupt("no end-of-central-directory record");

    const std::uint16_t count = u16(d, eocd + 10);
    std::size_t at = u32(d, eocd + 16);
    for (std::uint16_t i = 0; i < count; ++i) {
        if (u32(d, at) != kCentralHeader)
            corrupt("bad central directory header");
        Entry e;
        e.method = u16(d, at + 10);
        e.compressed_size = u32(d, at + 20);
        e.uncompressed_size = u32(d, at + 24);
        const std::uint16_t name_len = u16(d, at + 28);
        const std::uint16_t extra_len = u16(d, at + 30);
        const std::uint16_t comment_len = u16(d, at + 32);
        e.local_header_offset = u32(d, at + 42);
        if (at + 46 + name_len > d.size())
            corrupt("truncated file name");
        entries_.emplace(std::string(d.substr(at + 46, name_len)), e);
        at += 46 + name_len + extra_len + comment_len;
    }
}

std::optional<std::string> ZipReader::read(std::string_view name) const {
    const auto it = entries_.find(name);
    if (it == entries_.end())
        return std::nullopt;
    const Entry& e = it->second;
    const std::string_view d = data_;
    if (u32(d, e.local_header_offset) != kLocalHeader)
        corrupt("bad local header for " + std::string(name));
    const std::size_t start = e.local_header_offset + 30 + u16(d, e.local_header_offset + 26) +
                              u16(d, e.local_header_offset + 28);
    if (start + e.compressed_size > d.size())
        corrupt("member " + std::string(name) + " runs past end of archive");
    const auto payload = d.substr(start, e.compressed_size);

    if (e.method == 0)
        return std::string(payload);
    if (e.method != 8)
        corrupt("unsupported compression method " + std::to_string(e.method));
    if (e.uncompressed_size == 0)
        return std::string{};

    std::string out(e.uncompressed_size, '\0');
    z_stream zs{};
    if (inflateInit2(&zs, -MAX_WBITS) != Z_OK)
        corrupt("inflateInit2 failed");
    zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(payload.data()));
    zs.avail_in = static_cast<uInt>(payload.size());
    zs.next_out = reinterpret_cast<Bytef*>(out.data());
    zs.avail_out = static_cast<uInt>(out.size());
    const int rc = inflate(&zs, Z_FINISH);
    const auto produced = zs.total_out;
    inflateEnd(&zs);
    if (rc != Z_STREAM_END || produced != e.uncompressed_size)
        corrupt("cannot inflate " + std::string(name));
    return out;
}

}  // namespace chmeta::detail
