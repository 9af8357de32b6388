#include "chmeta/ingest/csv.hpp"

#include "chmeta/error.hpp"

namespace chmeta::csv {

std::vector<Row> parse(std::string_view data) {
    if (data.substr(0, 3) == "\xEF\xBB\xBF")
        data.remove_prefix(3);

    std::vector<Row> rows;
    Row row;
    std::string field;
    bool quoted = false;       // inside a quoted field
    bool was_quoted = false;   // current field started with a quote
    bool row_has_data = false;
    int line = 1;

    auto fail = [&](const std::string& why) {
        throw Error(Errc::MalformedCsv, "line " + std::to_string(line) + ": " + why);
    };
    auto end_field = [&] {
        row.push_back(std::move(field));
        field.clear();
        was_quoted = false;
    };
    auto end_row = [&] {
        end_field();
        rows.push_back(std::move(row));
        row.clear();
        row_has_data = false;
    };

    for (std::size_t i = 0; i < data.size(); ++i) {
        const char c = data[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < data.size() && data[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                if (c == '\n')
                    ++line;
                field += c;
            }
            continue;
        }
        switch (c) {
        case '"':
            if (!field.empty() || was_quoted)
                fail("quote inside an unquoted field");
            quoted = true;
            was_quoted = true;
            row_has_data = true;
            break;
        case ',':
            end_field();
            row_has_data = true;
            break;
        case '\r':
            if (i + 1 < data.size() && data[i + 1] == '\n')
                break;
            fail("bare carriage return");
            break;
        case '\n':
            end_row();
            ++line;
            break;
        default:
            if (was_quoted)
                fail("text after closing quote");
            field += c;
            row_has_data = true;
        }
    }
    if (quoted)
        fail("unterminated quoted field");
    if (row_has_data || !field.empty() || !row.empty())
        end_row();
    return rows;
}

std::string format_field(std::string_view f) {
    if (f.find_first_of(",\"\r\n") == std::string_view::npos)
        return std::string(f);
    std::string out;
    out.reserve(f.size() + 2);
    out += '"';
    for (char c : f) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string format_row(const Row& row) {
    std::string out;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i != 0)
            out += ',';
        out += format_field(row[i]);
    }
    out += '\n';
    return out;
}

}  // namespace chmeta::csv
