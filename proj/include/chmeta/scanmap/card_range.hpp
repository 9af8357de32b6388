#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "chmeta/error.hpp"

namespace chmeta {

/// Largest accepted card number within a unit.
inline constexpr std::uint32_t kMaxCardNo = 99999;

/// Inclusive run of card numbers, from the `cards` field ("12-14").
struct CardRange {
    std::uint32_t start = 1;
    std::uint32_t end = 1;

    bool operator==(const CardRange&) const = default;
    bool contains(std::uint32_t card) const noexcept { return card >= start && card <= end; }
};

/// Grammar `R := N | N "-" N`, comma separated, N in 1..kMaxCardNo.
/// Ranges come back in input order.
Result<std::vector<CardRange>> try_parse_card_ranges(std::string_view s);

inline std::vector<CardRange> parse_card_range(std::string_view s) {
    return try_parse_card_ranges(s).value();
}

std::string format_card_ranges(const std::vector<CardRange>& ranges);

/// One card-number-to-scan-file association from the map sheet. Seed rows
/// written on map creation carry an empty scan_file until a librarian fills it.
struct ScanBinding {
    std::uint32_t card_no = 1;
    std::string role;
    std::string scan_file;

    bool operator==(const ScanBinding&) const = default;
};

}  // namespace chmeta
