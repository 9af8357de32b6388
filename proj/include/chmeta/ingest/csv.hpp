#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace chmeta::csv {

using Row = std::vector<std::string>;

/// RFC 4180 reader. Quoted fields may hold commas, doubled quotes and line
/// breaks; CRLF and LF record separators are both accepted, a trailing
/// separator at end of input does not start a new record, and a leading
/// UTF-8 BOM is dropped. Throws Error(MalformedCsv) naming the line.
std::vector<Row> parse(std::string_view data);

/// Quotes a field only when it contains a comma, quote, CR or LF.
std::string format_field(std::string_view field);

/// One record terminated by '\n'.
std::string format_row(const Row& row);

}  // namespace chmeta::csv
