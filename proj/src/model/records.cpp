#include "chmeta/model/records.hpp"

#include <limits>

#include "chmeta/util/text.hpp"

namespace chmeta {

std::string_view DocumentRecord::value(std::string_view id) const noexcept {
    const auto it = values.find(id);
    return it == values.end() ? std::string_view{} : std::string_view{it->second};
}

std::optional<DocumentNumber> DocumentRecord::doc_no() const {
    auto r = try_parse_document_number(value("doc_no"));
    if (!r)
        return std::nullopt;
    return *r;
}

std::string_view metric_value(const MetricRows& rows, std::string_view key) noexcept {
    for (const auto& [k, v] : rows)
        if (k == key)
            return v;
    return {};
}

MetricRecord metric_record(const MetricRows& rows) {
    MetricRecord m;
    m.title = std::string(text::trim(metric_value(rows, metric_key::kTitle)));
    if (auto s = try_parse_shelfmark(metric_value(rows, metric_key::kShelfmark)))
        m.shelfmark = *s;
    if (auto n = text::parse_unsigned(text::trim(metric_value(rows, metric_key::kCardCount)));
        n && *n <= std::numeric_limits<std::uint32_t>::max())
        m.card_count = static_cast<std::uint32_t>(*n);
    m.format = std::string(text::trim(metric_value(rows, metric_key::kFormat)));
    if (const auto r = metric_value(rows, metric_key::kRemarks); !r.empty())
        m.remarks = std::string(r);
    return m;
}

}  // namespace chmeta
