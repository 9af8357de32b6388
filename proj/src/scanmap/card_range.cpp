#include "chmeta/scanmap/card_range.hpp"

#include <algorithm>

#include "chmeta/util/text.hpp"

namespace chmeta {

namespace {

bool parse_card_no(std::string_view s, std::uint32_t& out) {
    const auto v = text::parse_unsigned(s);
    if (!v || *v == 0 || *v > kMaxCardNo)
        return false;
    out = static_cast<std::uint32_t>(*v);
    return true;
}

}  // namespace

Result<std::vector<CardRange>> try_parse_card_ranges(std::string_view s) {
    std::vector<CardRange> ranges;
    for (const auto& raw : text::split(s, ',')) {
        const auto item = text::trim(raw);
        CardRange r;
        const auto dash = item.find('-');
        bool ok = false;
        if (dash == std::string_view::npos) {
            ok = parse_card_no(item, r.start);
            r.end = r.start;
        } else {
            ok = parse_card_no(text::trim(item.substr(0, dash)), r.start) &&
                 parse_card_no(text::trim(item.substr(dash + 1)), r.end);
        }
        if (!ok)
            return Failure{Errc::GrammarMismatch, "card range '" + std::string(item) + "' is not N or N-N"};
        if (r.start > r.end)
            return Failure{Errc::RangeReversed, "card range '" + std::string(item) + "' runs backwards"};
        // overlapping or adjacent with the previous item: merge
        if (!ranges.empty() && r.start >= ranges.back().start &&
            static_cast<std::uint64_t>(r.start) <= static_cast<std::uint64_t>(ranges.back().end) + 1) {
            ranges.back().end = std::max(ranges.back().end, r.end);
            continue;
        }
        ranges.push_back(r);
    }
    return ranges;
}

std::string format_card_ranges(const std::vector<CardRange>& ranges) {
    std::string out;
    for (const auto& r : ranges) {
        if (!out.empty())
            out += ',';
        out += std::to_string(r.start);
        if (r.end != r.start)
            out += '-' + std::to_string(r.end);
    }
    return out;
}

}  // namespace chmeta
