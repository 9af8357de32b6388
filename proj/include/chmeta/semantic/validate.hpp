#pragma once

#include <filesystem>
#include <string>

#include "chmeta/check/diagnostic.hpp"
#include "chmeta/ingest/workbook.hpp"
#include "chmeta/model/schema.hpp"
#include "chmeta/sec/catalog.hpp"

namespace chmeta {

enum class Verdict { Accepted, Rejected };

std::string_view to_string(Verdict v) noexcept;

struct SeverityCounts {
    std::size_t errors = 0;
    std::size_t warnings = 0;
    std::size_t info = 0;

    bool operator==(const SeverityCounts&) const = default;
};

/// Program-2 outcome for one unit, or for the SEC catalog (subject "SEC").
struct ValidationReport {
    std::string subject;
    std::string generated_at;
    Diagnostics findings;

    SeverityCounts summary() const noexcept;
    Verdict verdict() const noexcept { return summary().errors == 0 ? Verdict::Accepted : Verdict::Rejected; }
};

/// Current UTC time in report format.
std::string report_timestamp();

/// SECREF_UNKNOWN for a reference to an id the catalog lacks, and
/// SECREF_KIND_MISMATCH for a place id in a person column or the reverse.
/// Values that do not parse as ids are left to Program 1.
Diagnostics check_refs(const UnitWorkbook& w, const SecCatalog& sec, const SchemaConfig& schema);

/// Within each category (or across the unit), sequence numbers must run
/// 1..max without repeats. Each repeat is a SEQ_DUPLICATE error on its row;
/// each group with holes gets one SEQ_GAP warning listing them. Rows whose
/// doc_no does not parse are ignored.
Diagnostics check_sequencing(const UnitWorkbook& w, SequencingMode mode);

/// Life-date checks for one person row: LIFE_DATE_INVALID for an unparseable
/// birth or death, LIFESPAN_NEGATIVE when death precedes birth,
/// LIFESPAN_EXCEEDED when the year difference is above 110.
Diagnostics check_lifespan(const SecEntry& person, int row = 2);

/// Catalog-wide checks: duplicate ids, empty preferred names, authority URL
/// lint and life dates.
ValidationReport validate_sec(const SecCatalog& sec, std::string generated_at = report_timestamp());

/// Adds a map sheet seeded with one recto row per declared card, blank
/// scan_file. Leaves an existing map alone.
/// Throws Error(PreconditionViolated) unless `report` accepts this unit.
UnitWorkbook ensure_map_sheet(UnitWorkbook w, const ValidationReport& report);

struct UnitValidation {
    ValidationReport report;
    UnitWorkbook workbook;  // with the map sheet once accepted
    bool map_created = false;
};

/// Full analysis of a completed workbook: every Program-1 check, metric
/// completeness, SEC references and sequencing. Accepted units come back
/// with their map sheet.
UnitValidation validate_unit(const UnitWorkbook& w, const SecCatalog& sec, const SchemaConfig& schema,
                             std::string generated_at = report_timestamp());

/// Plain-text report. Apart from the `generated:` line the output depends
/// only on subject and findings.
std::string render_report(const ValidationReport& r);
std::string render_report_json(const ValidationReport& r);
ValidationReport parse_report_json(std::string_view json);

/// "2 errors, 1 warning, 0 info"
std::string summary_line(const SeverityCounts& c);

/// Writes report.txt and report.json into `dir`.
void write_report(const ValidationReport& r, const std::filesystem::path& dir);

}  // namespace chmeta
