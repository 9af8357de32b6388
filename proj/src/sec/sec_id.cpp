#include "chmeta/sec/sec_id.hpp"

#include <fmt/format.h>

#include "chmeta/util/text.hpp"

namespace chmeta {

std::string_view to_string(SecKind kind) noexcept {
    return kind == SecKind::Person ? "person" : "place";
}

std::string SecId::to_string() const {
    return fmt::format("{}-{:06}", kind == SecKind::Person ? 'P' : 'L', number);
}

Result<SecId> try_parse_sec_id(std::string_view s) {
    if (s.size() != 8 || s[1] != '-' || (s[0] != 'P' && s[0] != 'L') || !text::is_digits(s.substr(2)))
        return Failure{Errc::InvalidSecId, "expected P-NNNNNN or L-NNNNNN, got '" + std::string(s) + "'"};
    const auto number = *text::parse_unsigned(s.substr(2));
    if (number == 0)
        return Failure{Errc::InvalidSecId, "SEC number must be positive: '" + std::string(s) + "'"};
    return SecId{s[0] == 'P' ? SecKind::Person : SecKind::Place, static_cast<std::uint32_t>(number)};
}

}  // namespace chmeta
