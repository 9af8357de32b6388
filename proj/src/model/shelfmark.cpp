#include "chmeta/model/shelfmark.hpp"

#include "chmeta/util/text.hpp"

namespace chmeta {

std::string Shelfmark::unit_id() const {
    return text::slugify(to_string());
}

Result<Shelfmark> try_parse_shelfmark(std::string_view s) {
    constexpr std::string_view lead = "SA,";
    if (s.substr(0, lead.size()) != lead)
        return Failure{Errc::MissingPrefix, "shelfmark must start with 'SA, ': '" + std::string(s) + "'"};
    auto rest = s.substr(lead.size());
    if (rest.empty() || text::trim(rest).empty())
        return Failure{Errc::EmptyName, "shelfmark has no name: '" + std::string(s) + "'"};
    if (rest.front() != ' ')
        return Failure{Errc::MissingPrefix, "expected a space after 'SA,': '" + std::string(s) + "'"};
    return Shelfmark{std::string(rest.substr(1))};
}

}  // namespace chmeta
