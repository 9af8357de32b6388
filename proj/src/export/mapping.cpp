#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "chmeta/error.hpp"
#include "chmeta/export/export.hpp"
#include "chmeta/ingest/csv.hpp"
#include "chmeta/util/text.hpp"

namespace chmeta {

std::string_view to_string(EventClass e) noexcept {
    switch (e) {
    case EventClass::Creation: return "creation";
    case EventClass::Issuing: return "issuing";
    case EventClass::Production: return "production";
    }
    return "";
}

CidocMapping default_cidoc_mapping() {
    CidocMapping m;
    m.event.fill(EventClass::Creation);
    m.event[3] = EventClass::Issuing;
    m.event[4] = EventClass::Issuing;
    m.event[5] = EventClass::Production;
    return m;
}

CidocMapping load_cidoc_mapping(const std::filesystem::path& path) {
    namespace pt = boost::property_tree;
    pt::ptree tree;
    try {
        pt::read_ini(path.string(), tree);
    } catch (const pt::ini_parser_error& e) {
        throw Error(Errc::ConfigInvalid, e.what());
    }
    auto m = default_cidoc_mapping();
    const auto section = tree.get_child_optional("cidoc");
    if (!section)
        return m;
    for (const auto& [key, node] : *section) {
        const auto digit = text::parse_unsigned(key);
        const auto category = digit ? category_from_code(static_cast<int>(*digit)) : std::nullopt;
        if (!category)
            throw Error(Errc::ConfigInvalid, path.string() + ": '" + key + "' is not a category digit");
        const auto value = text::to_lower_ascii(text::trim(node.data()));
        if (value == "creation")
            m.event[to_digit(*category) - 1] = EventClass::Creation;
        else if (value == "issuing")
            m.event[to_digit(*category) - 1] = EventClass::Issuing;
        else if (value == "production")
            m.event[to_digit(*category) - 1] = EventClass::Production;
        else
            throw Error(Errc::ConfigInvalid, path.string() + ": unknown event class '" + value + "'");
    }
    return m;
}

std::optional<std::string_view> agent_field(Category c) noexcept {
    switch (c) {
    case Category::OutgoingCorrespondence:
    case Category::IncomingCorrespondence: return field::kSenderSec;
    case Category::CreativeWorks: return field::kAuthorSec;
    case Category::PersonalMaterials:
    case Category::HistoricalMaterials: return field::kIssuerSec;
    default: return std::nullopt;
    }
}

std::vector<std::pair<std::string, std::string>> export_dc(const UnitWorkbook& w) {
    const auto m = w.metric_record();
    if (!m.complete())
        throw Error(Errc::MetricIncomplete, "unit " + w.unit_id + ": metric lacks title or shelfmark");
    std::vector<std::pair<std::string, std::string>> out{
        {"title", m.title},
        {"identifier", m.shelfmark->to_string()},
    };
    if (!m.format.empty())
        out.emplace_back("format", m.format);
    if (m.card_count)
        out.emplace_back("extent", std::to_string(*m.card_count) + " cards");
    return out;
}

std::string render_dc_csv(const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::string out = csv::format_row({"term", "value"});
    for (const auto& [term, value] : pairs)
        out += csv::format_row({"dc:" + term, value});
    return out;
}

}  // namespace chmeta
