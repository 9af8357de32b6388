#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "chmeta/model/date.hpp"
#include "chmeta/model/document_number.hpp"
#include "chmeta/model/shelfmark.hpp"
#include "chmeta/scanmap/card_range.hpp"
#include "chmeta/sec/sec_id.hpp"

namespace chmeta {

/// Parsed cell value. Text and URL fields stay strings.
using TypedValue =
    std::variant<std::string, DocumentNumber, DateExpression, SecId, std::vector<CardRange>, std::int64_t>;

using FieldMap = std::map<std::string, std::string, std::less<>>;

/// One row of the documents sheet. `values` holds raw cell text for every
/// column of the workbook; `parsed` is filled by row typing after checks.
struct DocumentRecord {
    FieldMap values;
    std::map<std::string, TypedValue, std::less<>> parsed;

    /// Empty view when the column is absent.
    std::string_view value(std::string_view id) const noexcept;
    std::optional<DocumentNumber> doc_no() const;

    bool operator==(const DocumentRecord& other) const { return values == other.values; }
};

namespace metric_key {
inline constexpr std::string_view kTitle = "title";
inline constexpr std::string_view kShelfmark = "shelfmark";
inline constexpr std::string_view kCardCount = "card_count";
inline constexpr std::string_view kFormat = "format";
inline constexpr std::string_view kRemarks = "remarks";
}  // namespace metric_key

/// Ordered key,value rows of the metric sheet, raw.
using MetricRows = std::vector<std::pair<std::string, std::string>>;

/// Typed view over the metric sheet.
struct MetricRecord {
    std::string title;
    std::optional<Shelfmark> shelfmark;
    std::optional<std::uint32_t> card_count;
    std::string format;
    std::optional<std::string> remarks;

    /// Title and a parseable shelfmark present.
    bool complete() const noexcept { return !title.empty() && shelfmark.has_value(); }
};

MetricRecord metric_record(const MetricRows& rows);

/// Empty view when the key is absent. First occurrence wins.
std::string_view metric_value(const MetricRows& rows, std::string_view key) noexcept;

}  // namespace chmeta
