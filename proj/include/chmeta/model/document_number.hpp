#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "chmeta/error.hpp"
#include "chmeta/model/category.hpp"

namespace chmeta {

/// `<category digit>.<sequence>`, e.g. "2.13". The canonical text form has
/// no padding and no whitespace, so parse/format round-trips exactly.
struct DocumentNumber {
    Category category = Category::Portraits;
    std::uint32_t sequence = 1;

    auto operator<=>(const DocumentNumber&) const = default;

    std::string to_string() const;
};

Result<DocumentNumber> try_parse_document_number(std::string_view s);

/// Throwing form of try_parse_document_number.
inline DocumentNumber parse_document_number(std::string_view s) {
    return try_parse_document_number(s).value();
}

}  // namespace chmeta
