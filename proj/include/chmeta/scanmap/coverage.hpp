#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "chmeta/check/diagnostic.hpp"
#include "chmeta/ingest/workbook.hpp"

namespace chmeta {

/// Scan folder of a unit: `<root>/<first character of unit_id>/<unit_id>/`.
/// Pure path arithmetic; nothing is read from disk.
std::filesystem::path resolve_scan_folder(std::string_view unit_id, const std::filesystem::path& root);

/// Compares the map sheet against the files found in the unit's scan folder
/// (relative paths) and the cards the documents declare:
///  - SCAN_MISSING (error) for a binding whose file is not in `files`;
///  - SCAN_UNMAPPED (warning) for a file no binding names;
///  - CARD_UNBOUND (error) for a declared card without any filled binding.
/// Seed rows with a blank scan_file count neither as missing nor as bound.
/// Throws Error(MapSheetAbsent) when the workbook has no map.
Diagnostics check_coverage(const UnitWorkbook& w, const std::vector<std::string>& files);

/// Every card named by a parseable `cards` value, ascending.
std::vector<std::uint32_t> declared_cards(const UnitWorkbook& w);

/// Regular files below `folder`, as sorted generic relative paths. Empty if
/// the folder does not exist.
std::vector<std::string> list_scan_files(const std::filesystem::path& folder);

}  // namespace chmeta
