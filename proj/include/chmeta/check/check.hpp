#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "chmeta/check/diagnostic.hpp"
#include "chmeta/ingest/workbook.hpp"
#include "chmeta/model/schema.hpp"

namespace chmeta {

/// Syntactic and completeness checks for one documents-sheet row, in schema
/// field order:
///  - MANDATORY_MISSING for an empty mandatory field applicable to the row's category;
///  - BLOCKED_FIELD for a non-empty field not applicable to the category;
///  - a kind-specific code for any non-empty value that does not parse.
/// Category-dependent checks are skipped while doc_no itself is invalid.
/// `row` is the spreadsheet row used in the diagnostic addresses.
Diagnostics check_row(const DocumentRecord& r, const SchemaConfig& schema, int row = 2);

/// Same checks, also filling `r.parsed` with every non-empty value of a
/// known field that parsed.
Diagnostics type_row(DocumentRecord& r, const SchemaConfig& schema, int row = 2);

/// Whole-workbook Program-1 pass. While the metric lacks title or a valid
/// shelfmark and documents exist, the only finding is METRIC_FIRST.
/// Otherwise: metric field syntax, every row, and DUPLICATE_DOCNO on each
/// repeat of a document number after its first occurrence.
Diagnostics check_unit(const UnitWorkbook& w, const SchemaConfig& schema);

/// METRIC_INVALID for a malformed shelfmark or card_count.
Diagnostics check_metric(const UnitWorkbook& w);

/// Row checks and DUPLICATE_DOCNO only, regardless of the metric state.
Diagnostics check_documents(const UnitWorkbook& w, const SchemaConfig& schema);

/// Errors first, then warnings, then info; stable within each group.
Diagnostics sorted_by_severity(Diagnostics ds);

/// Sidecar rendering of a finding list.
struct Annotation {
    std::string json;  // diagnostics.json
    std::string text;  // diagnostics.txt
    std::string row_messages_csv;  // annotations.csv: sheet,row,messages
    /// Concatenated messages per (sheet, row), the spreadsheet's column A.
    std::map<std::pair<Sheet, int>, std::string> row_messages;
};

Annotation annotate(const UnitWorkbook& w, const Diagnostics& ds);

/// Writes diagnostics.json, diagnostics.txt and annotations.csv into `dir`.
void write_annotation(const Annotation& a, const std::filesystem::path& dir);

}  // namespace chmeta
