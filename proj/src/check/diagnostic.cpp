#include "chmeta/check/diagnostic.hpp"

#include <algorithm>
#include <array>

#include <nlohmann/json.hpp>

#include "chmeta/error.hpp"

namespace chmeta {

namespace {

constexpr std::array<std::string_view, 3> kSeverities = {"error", "warning", "info"};
constexpr std::array<std::string_view, 6> kSheets = {"metric", "documents", "map", "persons", "places", "proposals"};

constexpr std::string_view kRegistry[] = {
    code::kMetricFirst,      code::kMetricInvalid,       code::kMandatoryMissing,
    code::kBlockedField,     code::kDocNoInvalid,        code::kDateSyntax,
    code::kDateInvalid,      code::kDateRangeReversed,   code::kSecRefSyntax,
    code::kCardsInvalid,     code::kUrlInvalid,          code::kIntegerInvalid,
    code::kDuplicateDocNo,   code::kMetricIncomplete,    code::kNoDocuments,
    code::kSecRefUnknown,    code::kSecRefKindMismatch,  code::kSeqDuplicate,
    code::kSeqGap,           code::kLoadFailed,          code::kLifespanExceeded,
    code::kLifespanNegative, code::kLifeDateInvalid,     code::kSecDuplicateId,
    code::kSecEmptyName,     code::kUrlMalformed,        code::kUrlScheme,
    code::kUrlUnrecognizedAuthority, code::kScanMissing, code::kScanUnmapped,
    code::kCardUnbound,      code::kNoScans,
};

}  // namespace

std::string_view to_string(Severity s) noexcept {
    return kSeverities[static_cast<std::size_t>(s)];
}

std::string_view to_string(Sheet s) noexcept {
    return kSheets[static_cast<std::size_t>(s)];
}

std::optional<Severity> severity_from_string(std::string_view s) noexcept {
    for (std::size_t i = 0; i < kSeverities.size(); ++i)
        if (kSeverities[i] == s)
            return static_cast<Severity>(i);
    return std::nullopt;
}

std::optional<Sheet> sheet_from_string(std::string_view s) noexcept {
    for (std::size_t i = 0; i < kSheets.size(); ++i)
        if (kSheets[i] == s)
            return static_cast<Sheet>(i);
    return std::nullopt;
}

bool is_registered_code(std::string_view c) noexcept {
    return std::find(std::begin(kRegistry), std::end(kRegistry), c) != std::end(kRegistry);
}

std::string Diagnostic::to_line() const {
    std::string line;
    line.reserve(64 + message.size());
    line += to_string(severity);
    line += ' ';
    line += code;
    line += ' ';
    line += to_string(sheet);
    line += "!R";
    line += std::to_string(row);
    line += 'C';
    line += column;
    line += ": ";
    line += message;
    return line;
}

std::size_t count(const Diagnostics& ds, Severity s) noexcept {
    return static_cast<std::size_t>(
        std::count_if(ds.begin(), ds.end(), [s](const Diagnostic& d) { return d.severity == s; }));
}

bool has_errors(const Diagnostics& ds) noexcept {
    return count(ds, Severity::Error) != 0;
}

void to_json(nlohmann::json& j, const Diagnostic& d) {
    j = nlohmann::json{{"severity", to_string(d.severity)},
                       {"code", d.code},
                       {"sheet", to_string(d.sheet)},
                       {"row", d.row},
                       {"column", d.column},
                       {"message", d.message}};
}

void from_json(const nlohmann::json& j, Diagnostic& d) {
    const auto sev = severity_from_string(j.at("severity").get<std::string>());
    const auto sheet = sheet_from_string(j.at("sheet").get<std::string>());
    if (!sev || !sheet)
        throw Error(Errc::MalformedManifest, "bad diagnostic record " + j.dump());
    d.severity = *sev;
    d.sheet = *sheet;
    d.code = j.at("code").get<std::string>();
    d.row = j.at("row").get<int>();
    d.column = j.at("column").get<std::string>();
    d.message = j.at("message").get<std::string>();
}

}  // namespace chmeta
