#include "chmeta/scanmap/coverage.hpp"

#include <algorithm>
#include <set>

#include "chmeta/error.hpp"

namespace chmeta {

namespace fs = std::filesystem;

fs::path resolve_scan_folder(std::string_view unit_id, const fs::path& root) {
    if (unit_id.empty())
        return root / "";
    return root / std::string(1, unit_id.front()) / std::string(unit_id) / "";
}

std::vector<std::uint32_t> declared_cards(const UnitWorkbook& w) {
    std::set<std::uint32_t> cards;
    for (const auto& d : w.documents) {
        auto ranges = try_parse_card_ranges(d.value(field::kCards));
        if (!ranges)
            continue;
        for (const auto& r : *ranges)
            for (std::uint64_t c = r.start; c <= r.end; ++c)
                cards.insert(static_cast<std::uint32_t>(c));
    }
    return {cards.begin(), cards.end()};
}

Diagnostics check_coverage(const UnitWorkbook& w, const std::vector<std::string>& files) {
    if (!w.map)
        throw Error(Errc::MapSheetAbsent, "unit " + w.unit_id + " has no map sheet yet");
    const std::set<std::string, std::less<>> present(files.begin(), files.end());
    std::set<std::string, std::less<>> referenced;
    std::set<std::uint32_t> bound;

    Diagnostics out;
    const auto& map = *w.map;
    for (std::size_t i = 0; i < map.size(); ++i) {
        const auto& b = map[i];
        if (b.scan_file.empty())
            continue;
        referenced.insert(b.scan_file);
        bound.insert(b.card_no);
        if (!present.count(b.scan_file))
            out.push_back(Diagnostic{Severity::Error, std::string(code::kScanMissing), Sheet::Map, record_row(i),
                                     "scan_file",
                                     "card " + std::to_string(b.card_no) + " " + b.role + ": file " + b.scan_file +
                                         " not found in the scan folder"});
    }
    for (const auto& f : present)
        if (!referenced.count(f))
            out.push_back(Diagnostic{Severity::Warning, std::string(code::kScanUnmapped), Sheet::Map, 1,
                                     std::string(kWholeRow), "file " + f + " is not bound to any card"});
    for (const auto card : declared_cards(w))
        if (!bound.count(card))
            out.push_back(Diagnostic{Severity::Error, std::string(code::kCardUnbound), Sheet::Map, 1,
                                     std::string(kWholeRow), "card " + std::to_string(card) + " has no scan"});
    return out;
}

std::vector<std::string> list_scan_files(const fs::path& folder) {
    std::vector<std::string> out;
    std::error_code ec;
    if (!fs::is_directory(folder, ec))
        return out;
    for (auto it = fs::recursive_directory_iterator(folder, ec); !ec && it != fs::recursive_directory_iterator();
         it.increment(ec)) {
        if (it->is_regular_file(ec))
            out.push_back(fs::relative(it->path(), folder, ec).generic_string());
    }
    if (ec)
        throw Error(Errc::IoError, "cannot list " + folder.string() + ": " + ec.message());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace chmeta
