#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chmeta::text {

std::string_view trim(std::string_view s) noexcept;
bool is_digits(std::string_view s) noexcept;
bool has_outer_space(std::string_view s) noexcept;
std::string to_lower_ascii(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

/// Decimal, no sign, no whitespace, fits in 64 bits.
std::optional<std::uint64_t> parse_unsigned(std::string_view s) noexcept;

bool is_valid_utf8(std::string_view s) noexcept;

/// Percent-encodes everything except RFC 3986 unreserved characters.
std::string percent_encode(std::string_view s);

/// Lowercase ASCII alphanumerics kept, every other run collapsed to '-'.
std::string slugify(std::string_view s);

}  // namespace chmeta::text
