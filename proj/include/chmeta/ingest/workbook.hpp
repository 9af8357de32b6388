#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "chmeta/model/records.hpp"
#include "chmeta/model/schema.hpp"
#include "chmeta/scanmap/card_range.hpp"

namespace chmeta {

/// One archival unit. On disk a unit is a directory:
///
///     manifest.json    unit_id, shelfmark, schema_version, sheets
///     metric.csv       key,value
///     documents.csv    header row of field ids, one row per document
///     map.csv          card_no,role,scan_file   (only once created)
struct UnitWorkbook {
    std::string unit_id;
    int schema_version = 1;
    MetricRows metric;
    std::vector<std::string> columns;
    std::vector<DocumentRecord> documents;
    std::optional<std::vector<ScanBinding>> map;

    bool operator==(const UnitWorkbook&) const = default;

    MetricRecord metric_record() const { return chmeta::metric_record(metric); }
};

namespace sheet_file {
inline constexpr std::string_view kManifest = "manifest.json";
inline constexpr std::string_view kMetric = "metric.csv";
inline constexpr std::string_view kDocuments = "documents.csv";
inline constexpr std::string_view kMap = "map.csv";
}  // namespace sheet_file

/// Empty workbook for a new unit: metric seeded with the shelfmark, columns
/// from the schema.
UnitWorkbook new_unit_workbook(const Shelfmark& shelfmark, const SchemaConfig& schema);

/// Throws Error with MissingManifest, MalformedManifest, MissingSheet,
/// HeaderUnknownField, DuplicateHeader, EncodingError, MalformedCsv,
/// InvalidMapRow, DuplicateBinding or SchemaDowngrade.
UnitWorkbook load_unit_workbook(const std::filesystem::path& dir, const SchemaConfig& schema);

/// Writes manifest and sheets. Output bytes depend only on `w`.
void save_unit_workbook(const UnitWorkbook& w, const std::filesystem::path& dir);

/// Adds schema columns the workbook lacks (empty cells), keeps every
/// existing value and bumps schema_version. Idempotent.
UnitWorkbook migrate_workbook(UnitWorkbook w, const SchemaConfig& schema);

/// Serialized sheet bytes, as save writes them.
std::string render_manifest(const UnitWorkbook& w);
std::string render_metric_csv(const UnitWorkbook& w);
std::string render_documents_csv(const UnitWorkbook& w);
std::string render_map_csv(const std::vector<ScanBinding>& map);

/// Parses map.csv rows; (card_no, role) must be unique.
std::vector<ScanBinding> parse_map_csv(std::string_view data);

/// Shared by the CSV directory loader and the XLSX adapter: builds a
/// workbook from already-split sheet rows.
struct SheetRows {
    std::vector<std::vector<std::string>> metric;
    std::vector<std::vector<std::string>> documents;
    std::optional<std::vector<std::vector<std::string>>> map;
};

UnitWorkbook assemble_workbook(std::string unit_id, int schema_version, const SheetRows& sheets,
                               const SchemaConfig& schema);

}  // namespace chmeta
