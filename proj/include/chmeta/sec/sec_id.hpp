#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "chmeta/error.hpp"

namespace chmeta {

enum class SecKind { Person, Place };

std::string_view to_string(SecKind kind) noexcept;

/// Catalog identifier, `P-000042` for persons and `L-000042` for places.
struct SecId {
    static constexpr std::uint32_t kMaxNumber = 999'999;

    SecKind kind = SecKind::Person;
    std::uint32_t number = 1;

    auto operator<=>(const SecId&) const = default;

    std::string to_string() const;
};

Result<SecId> try_parse_sec_id(std::string_view s);

inline SecId parse_sec_id(std::string_view s) {
    return try_parse_sec_id(s).value();
}

}  // namespace chmeta
