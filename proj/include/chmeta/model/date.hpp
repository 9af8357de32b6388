#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

#include "chmeta/error.hpp"

namespace chmeta {

enum class DatePrecision { Year, Month, Day };

/// A calendar date known to year, month or day precision. Proleptic
/// Gregorian throughout.
struct PartialDate {
    int year = 0;
    unsigned month = 0;  // 0 below Month precision
    unsigned day = 0;    // 0 below Day precision
    DatePrecision precision = DatePrecision::Year;

    bool operator==(const PartialDate&) const = default;

    /// First and last calendar day covered at this precision.
    std::chrono::year_month_day first_day() const;
    std::chrono::year_month_day last_day() const;

    std::string to_string() const;
};

/// Orders two partial dates at the coarser of their precisions.
std::weak_ordering compare_at_common_precision(const PartialDate& a, const PartialDate& b) noexcept;

enum class DateKind { Single, Range, OpenRange };
enum class DateQualifier { Exact, Approximate, Uncertain };

/// Accepted grammar:
///
///     DATE := P | P "/" P | P "/.." | "~" P | "?" P
///     P    := YYYY | YYYY-MM | YYYY-MM-DD
struct DateExpression {
    DateKind kind = DateKind::Single;
    PartialDate start;
    std::optional<PartialDate> end;
    DateQualifier qualifier = DateQualifier::Exact;

    bool operator==(const DateExpression&) const = default;

    std::string to_string() const;
};

/// Closed day interval covered by an expression; `last` is empty for open ranges.
struct DayInterval {
    std::chrono::year_month_day first;
    std::optional<std::chrono::year_month_day> last;
};

DayInterval interval_of(const DateExpression& e);

bool is_valid_calendar_date(int year, unsigned month, unsigned day) noexcept;

Result<PartialDate> try_parse_partial_date(std::string_view s);
Result<DateExpression> try_parse_date_expression(std::string_view s);

inline DateExpression parse_date_expression(std::string_view s) {
    return try_parse_date_expression(s).value();
}

}  // namespace chmeta
