#include "chmeta/model/date.hpp"

#include <fmt/format.h>

#include "chmeta/util/text.hpp"

namespace chmeta {

namespace chr = std::chrono;

bool is_valid_calendar_date(int year, unsigned month, unsigned day) noexcept {
    return chr::year_month_day{chr::year{year}, chr::month{month}, chr::day{day}}.ok();
}

chr::year_month_day PartialDate::first_day() const {
    const unsigned m = precision == DatePrecision::Year ? 1 : month;
    const unsigned d = precision == DatePrecision::Day ? day : 1;
    return chr::year_month_day{chr::year{year}, chr::month{m}, chr::day{d}};
}

chr::year_month_day PartialDate::last_day() const {
    switch (precision) {
    case DatePrecision::Year:
        return chr::year_month_day{chr::year{year}, chr::December, chr::day{31}};
    case DatePrecision::Month:
        return chr::year_month_day{chr::year{year} / chr::month{month} / chr::last};
    case DatePrecision::Day:
        break;
    }
    return first_day();
}

std::string PartialDate::to_string() const {
    switch (precision) {
    case DatePrecision::Year:
        return fmt::format("{:04}", year);
    case DatePrecision::Month:
        return fmt::format("{:04}-{:02}", year, month);
    case DatePrecision::Day:
        break;
    }
    return fmt::format("{:04}-{:02}-{:02}", year, month, day);
}

std::weak_ordering compare_at_common_precision(const PartialDate& a, const PartialDate& b) noexcept {
    if (auto c = a.year <=> b.year; c != 0)
        return c;
    if (a.precision == DatePrecision::Year || b.precision == DatePrecision::Year)
        return std::weak_ordering::equivalent;
    if (auto c = a.month <=> b.month; c != 0)
        return c;
    if (a.precision == DatePrecision::Month || b.precision == DatePrecision::Month)
        return std::weak_ordering::equivalent;
    return a.day <=> b.day;
}

std::string DateExpression::to_string() const {
    switch (kind) {
    case DateKind::Range:
        return start.to_string() + "/" + end->to_string();
    case DateKind::OpenRange:
        return start.to_string() + "/..";
    case DateKind::Single:
        break;
    }
    switch (qualifier) {
    case DateQualifier::Approximate:
        return "~" + start.to_string();
    case DateQualifier::Uncertain:
        return "?" + start.to_string();
    case DateQualifier::Exact:
        break;
    }
    return start.to_string();
}

DayInterval interval_of(const DateExpression& e) {
    DayInterval out{e.start.first_day(), std::nullopt};
    switch (e.kind) {
    case DateKind::Single:
        out.last = e.start.last_day();
        break;
    case DateKind::Range:
        out.last = e.end->last_day();
        break;
    case DateKind::OpenRange:
        break;
    }
    return out;
}

Result<PartialDate> try_parse_partial_date(std::string_view s) {
    auto mismatch = [&] {
        return Failure{Errc::GrammarMismatch, "expected YYYY, YYYY-MM or YYYY-MM-DD, got '" + std::string(s) + "'"};
    };
    if (s.size() != 4 && s.size() != 7 && s.size() != 10)
        return mismatch();
    if (!text::is_digits(s.substr(0, 4)))
        return mismatch();

    PartialDate p;
    p.year = static_cast<int>(*text::parse_unsigned(s.substr(0, 4)));
    if (s.size() == 4)
        return p;

    if (s[4] != '-' || !text::is_digits(s.substr(5, 2)))
        return mismatch();
    p.month = static_cast<unsigned>(*text::parse_unsigned(s.substr(5, 2)));
    p.precision = DatePrecision::Month;
    if (s.size() == 7) {
        if (p.month < 1 || p.month > 12)
            return Failure{Errc::CalendarInvalid, "no month " + std::string(s.substr(5, 2))};
        return p;
    }

    if (s[7] != '-' || !text::is_digits(s.substr(8, 2)))
        return mismatch();
    p.day = static_cast<unsigned>(*text::parse_unsigned(s.substr(8, 2)));
    p.precision = DatePrecision::Day;
    if (!is_valid_calendar_date(p.year, p.month, p.day))
        return Failure{Errc::CalendarInvalid, std::string(s) + " does not exist in the Gregorian calendar"};
    return p;
}

Result<DateExpression> try_parse_date_expression(std::string_view s) {
    DateExpression e;
    if (!s.empty() && (s.front() == '~' || s.front() == '?')) {
        e.qualifier = s.front() == '~' ? DateQualifier::Approximate : DateQualifier::Uncertain;
        auto p = try_parse_partial_date(s.substr(1));
        if (!p)
            return p.failure();
        e.start = *p;
        return e;
    }

    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        auto p = try_parse_partial_date(s);
        if (!p)
            return p.failure();
        e.start = *p;
        return e;
    }

    auto start = try_parse_partial_date(s.substr(0, slash));
    if (!start)
        return start.failure();
    e.start = *start;

    const auto rest = s.substr(slash + 1);
    if (rest == "..") {
        e.kind = DateKind::OpenRange;
        return e;
    }
    auto end = try_parse_partial_date(rest);
    if (!end)
        return end.failure();
    if (compare_at_common_precision(*start, *end) > 0)
        return Failure{Errc::RangeReversed, "range start after end in '" + std::string(s) + "'"};
    e.kind = DateKind::Range;
    e.end = *end;
    return e;
}

}  // namespace chmeta
