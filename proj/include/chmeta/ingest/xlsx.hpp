#pragma once

#include <filesystem>

#include "chmeta/ingest/workbook.hpp"

namespace chmeta {

/// Reads an Office Open XML workbook with sheets named Metric, Documents and
/// optionally MAP (case-insensitive) into the same logical workbook the CSV
/// directory would produce. Cell styling is ignored. In the Documents sheet,
/// columns whose header is empty or "messages" hold validator annotations
/// and are dropped; trailing all-empty rows are dropped too.
///
/// The unit id is the slug of the metric shelfmark (file stem when the
/// shelfmark does not parse).
///
/// Throws Error(UnreadableFile) for anything that is not a readable
/// workbook, Error(MissingSheet) when Metric or Documents is absent, and
/// the workbook assembly errors of load_unit_workbook.
UnitWorkbook import_xlsx(const std::filesystem::path& path, const SchemaConfig& schema, int schema_version = 1);

}  // namespace chmeta
