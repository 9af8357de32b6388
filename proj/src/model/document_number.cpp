#include "chmeta/model/document_number.hpp"

#include <limits>

#include "chmeta/util/text.hpp"

namespace chmeta {

std::string DocumentNumber::to_string() const {
    return std::to_string(to_digit(category)) + "." + std::to_string(sequence);
}

Result<DocumentNumber> try_parse_document_number(std::string_view s) {
    const auto dot = s.find('.');
    if (dot == std::string_view::npos || s.find('.', dot + 1) != std::string_view::npos)
        return Failure{Errc::NotTwoParts, "expected <category>.<sequence>, got '" + std::string(s) + "'"};

    const auto head = s.substr(0, dot);
    const auto tail = s.substr(dot + 1);
    if (text::has_outer_space(head) || text::has_outer_space(tail))
        return Failure{Errc::NonCanonicalForm, "whitespace in '" + std::string(s) + "'"};

    const auto category_value = text::parse_unsigned(head);
    if (!category_value || *category_value < 1 || *category_value > 9)
        return Failure{Errc::CategoryOutOfRange, "category must be a digit 1-9 in '" + std::string(s) + "'"};
    if (head.size() != 1)
        return Failure{Errc::NonCanonicalForm, "padded category in '" + std::string(s) + "'"};

    const auto seq = text::parse_unsigned(tail);
    if (!seq || *seq == 0 || *seq > std::numeric_limits<std::uint32_t>::max())
        return Failure{Errc::SequenceNotPositiveInteger,
                       "sequence must be a positive integer in '" + std::string(s) + "'"};
    if (tail.front() == '0')
        return Failure{Errc::NonCanonicalForm, "leading zero in '" + std::string(s) + "'"};

    return DocumentNumber{static_cast<Category>(*category_value), static_cast<std::uint32_t>(*seq)};
}

}  // namespace chmeta
