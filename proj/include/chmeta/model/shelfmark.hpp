#pragma once

#include <string>
#include <string_view>

#include "chmeta/error.hpp"

namespace chmeta {

/// Unit shelfmark of the form `SA, <Name>`, name surname-first and kept verbatim.
struct Shelfmark {
    static constexpr std::string_view kPrefix = "SA";

    std::string name;

    bool operator==(const Shelfmark&) const = default;

    std::string to_string() const { return std::string(kPrefix) + ", " + name; }

    /// Folder-safe unit id: lowercase ASCII alphanumerics, other runs become '-'.
    std::string unit_id() const;
};

Result<Shelfmark> try_parse_shelfmark(std::string_view s);

inline Shelfmark parse_shelfmark(std::string_view s) {
    return try_parse_shelfmark(s).value();
}

}  // namespace chmeta
