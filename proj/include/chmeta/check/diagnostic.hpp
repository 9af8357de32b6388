#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace chmeta {

enum class Severity { Error, Warning, Info };

/// Sheets a finding can point into. Persons/places/proposals address the
/// SEC catalog files.
enum class Sheet { Metric, Documents, Map, Persons, Places, Proposals };

std::string_view to_string(Severity s) noexcept;
std::string_view to_string(Sheet s) noexcept;
std::optional<Severity> severity_from_string(std::string_view s) noexcept;
std::optional<Sheet> sheet_from_string(std::string_view s) noexcept;

/// Column value for findings about a whole row.
inline constexpr std::string_view kWholeRow = "row";

/// Documented finding codes.
namespace code {
// Program 1
inline constexpr std::string_view kMetricFirst = "METRIC_FIRST";
inline constexpr std::string_view kMetricInvalid = "METRIC_INVALID";
inline constexpr std::string_view kMandatoryMissing = "MANDATORY_MISSING";
inline constexpr std::string_view kBlockedField = "BLOCKED_FIELD";
inline constexpr std::string_view kDocNoInvalid = "DOCNO_INVALID";
inline constexpr std::string_view kDateSyntax = "DATE_SYNTAX";
inline constexpr std::string_view kDateInvalid = "DATE_INVALID";
inline constexpr std::string_view kDateRangeReversed = "DATE_RANGE_REVERSED";
inline constexpr std::string_view kSecRefSyntax = "SECREF_SYNTAX";
inline constexpr std::string_view kCardsInvalid = "CARDS_INVALID";
inline constexpr std::string_view kUrlInvalid = "URL_INVALID";
inline constexpr std::string_view kIntegerInvalid = "INTEGER_INVALID";
inline constexpr std::string_view kDuplicateDocNo = "DUPLICATE_DOCNO";
// Program 2
inline constexpr std::string_view kMetricIncomplete = "METRIC_INCOMPLETE";
inline constexpr std::string_view kNoDocuments = "NO_DOCUMENTS";
inline constexpr std::string_view kSecRefUnknown = "SECREF_UNKNOWN";
inline constexpr std::string_view kSecRefKindMismatch = "SECREF_KIND_MISMATCH";
inline constexpr std::string_view kSeqDuplicate = "SEQ_DUPLICATE";
inline constexpr std::string_view kSeqGap = "SEQ_GAP";
inline constexpr std::string_view kLoadFailed = "LOAD_FAILED";
// SEC
inline constexpr std::string_view kLifespanExceeded = "LIFESPAN_EXCEEDED";
inline constexpr std::string_view kLifespanNegative = "LIFESPAN_NEGATIVE";
inline constexpr std::string_view kLifeDateInvalid = "LIFE_DATE_INVALID";
inline constexpr std::string_view kSecDuplicateId = "SEC_DUPLICATE_ID";
inline constexpr std::string_view kSecEmptyName = "SEC_EMPTY_NAME";
inline constexpr std::string_view kUrlMalformed = "URL_MALFORMED";
inline constexpr std::string_view kUrlScheme = "URL_SCHEME";
inline constexpr std::string_view kUrlUnrecognizedAuthority = "URL_UNRECOGNIZED_AUTHORITY";
// scan map
inline constexpr std::string_view kScanMissing = "SCAN_MISSING";
inline constexpr std::string_view kScanUnmapped = "SCAN_UNMAPPED";
inline constexpr std::string_view kCardUnbound = "CARD_UNBOUND";
// export
inline constexpr std::string_view kNoScans = "NO_SCANS";
}  // namespace code

/// True for codes in the registry above.
bool is_registered_code(std::string_view c) noexcept;

/// Cell-addressed finding. Rows are spreadsheet rows: on the documents,
/// map and SEC sheets row 1 is the header, so the first record is row 2.
struct Diagnostic {
    Severity severity = Severity::Error;
    std::string code;
    Sheet sheet = Sheet::Documents;
    int row = 1;
    std::string column{kWholeRow};
    std::string message;

    bool operator==(const Diagnostic&) const = default;

    /// `error BLOCKED_FIELD documents!R4Csender: message`
    std::string to_line() const;
};

using Diagnostics = std::vector<Diagnostic>;

/// Row number of the i-th (0-based) record on a sheet with a header row.
constexpr int record_row(std::size_t index) noexcept { return static_cast<int>(index) + 2; }

std::size_t count(const Diagnostics& ds, Severity s) noexcept;
bool has_errors(const Diagnostics& ds) noexcept;

void to_json(nlohmann::json& j, const Diagnostic& d);
void from_json(const nlohmann::json& j, Diagnostic& d);

}  // namespace chmeta
