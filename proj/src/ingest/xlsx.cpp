#include "chmeta/ingest/xlsx.hpp"

#include <map>
#include <vector>

#include "chmeta/error.hpp"
#include "chmeta/util/fs.hpp"
#include "chmeta/util/text.hpp"
#include "xml_sax.hpp"
#include "zip_reader.hpp"

namespace chmeta {

namespace {

using Rows = std::vector<std::vector<std::string>>;
using Attrs = std::map<std::string, std::string>;

std::string attr(const Attrs& a, const std::string& key) {
    const auto it = a.find(key);
    return it == a.end() ? std::string{} : it->second;
}

std::vector<std::string> read_shared_strings(const detail::ZipReader& zip) {
    std::vector<std::string> strings;
    const auto xml = zip.read("xl/sharedStrings.xml");
    if (!xml)
        return strings;
    bool in_t = false;
    int phonetic_depth = 0;
    detail::SaxHandlers h;
    h.start = [&](std::string_view name, const Attrs&) {
        if (name == "si")
            strings.emplace_back();
        else if (name == "rPh")
            ++phonetic_depth;
        else if (name == "t" && phonetic_depth == 0)
            in_t = true;
    };
    h.end = [&](std::string_view name) {
        if (name == "t")
            in_t = false;
        else if (name == "rPh")
            --phonetic_depth;
    };
    h.text = [&](std::string_view s) {
        if (in_t && !strings.empty())
            strings.back() += s;
    };
    detail::parse_xml(*xml, h, "sharedStrings.xml");
    return strings;
}

// sheet name (lowercased) -> member path inside the archive
std::map<std::string, std::string> read_sheet_paths(const detail::ZipReader& zip) {
    const auto workbook = zip.read("xl/workbook.xml");
    const auto rels = zip.read("xl/_rels/workbook.xml.rels");
    if (!workbook || !rels)
        throw Error(Errc::UnreadableFile, "not a spreadsheet: workbook.xml or its relationships missing");

    std::map<std::string, std::string> targets;
    detail::SaxHandlers rh;
    rh.start = [&](std::string_view name, const Attrs& a) {
        if (name == "Relationship")
            targets[attr(a, "Id")] = attr(a, "Target");
    };
    detail::parse_xml(*rels, rh, "workbook.xml.rels");

    std::map<std::string, std::string> sheets;
    detail::SaxHandlers wh;
    wh.start = [&](std::string_view name, const Attrs& a) {
        if (name != "sheet")
            return;
        auto target = targets[attr(a, "id")];
        if (target.empty())
            return;
        if (target.front() == '/')
            target = target.substr(1);
        else
            target = "xl/" + target;
        sheets[text::to_lower_ascii(attr(a, "name"))] = target;
    };
    detail::parse_xml(*workbook, wh, "workbook.xml");
    return sheets;
}

// "BC12" -> zero-based column index of "BC"
std::size_t column_index(std::string_view ref) {
    std::size_t col = 0;
    for (char c : ref) {
        if (c < 'A' || c > 'Z')
            break;
        col = col * 26 + static_cast<std::size_t>(c - 'A' + 1);
    }
    return col == 0 ? 0 : col - 1;
}

Rows read_sheet(const detail::ZipReader& zip, const std::string& member, const std::vector<std::string>& shared) {
    const auto xml = zip.read(member);
    if (!xml)
        throw Error(Errc::UnreadableFile, "worksheet " + member + " missing from archive");

    Rows rows;
    std::size_t next_col = 0;
    std::string cell_type;
    std::size_t cell_col = 0;
    std::string value;
    bool in_value = false;  // inside <v> or <is><t>
    bool in_cell = false;

    detail::SaxHandlers h;
    h.start = [&](std::string_view name, const Attrs& a) {
        if (name == "row") {
            const auto r = text::parse_unsigned(attr(a, "r"));
            const std::size_t target = r && *r > 0 ? static_cast<std::size_t>(*r) : rows.size() + 1;
            while (rows.size() + 1 < target)
                rows.emplace_back();
            rows.emplace_back();
            next_col = 0;
        } else if (name == "c") {
            const auto ref = attr(a, "r");
            cell_col = ref.empty() ? next_col : column_index(ref);
            cell_type = attr(a, "t");
            value.clear();
            in_cell = true;
        } else if (in_cell && (name == "v" || name == "t")) {
            in_value = true;
        }
    };
    h.end = [&](std::string_view name) {
        if (name == "v" || name == "t") {
            in_value = false;
        } else if (name == "c") {
            in_cell = false;
            std::string cell = value;
            if (cell_type == "s") {
                const auto idx = text::parse_unsigned(text::trim(value));
                if (!idx || *idx >= shared.size())
                    throw Error(Errc::UnreadableFile, member + ": bad shared string index '" + value + "'");
                cell = shared[static_cast<std::size_t>(*idx)];
            } else if (cell_type == "b") {
                cell = value == "1" ? "TRUE" : "FALSE";
            }
            if (rows.empty())
                rows.emplace_back();
            auto& row = rows.back();
            if (row.size() <= cell_col)
                row.resize(cell_col + 1);
            row[cell_col] = std::move(cell);
            next_col = cell_col + 1;
        }
    };
    h.text = [&](std::string_view s) {
        if (in_value)
            value += s;
    };
    detail::parse_xml(*xml, h, member);

    for (auto& row : rows)
        while (!row.empty() && row.back().empty())
            row.pop_back();
    while (!rows.empty() && rows.back().empty())
        rows.pop_back();
    return rows;
}

bool is_annotation_header(std::string_view h) {
    const auto t = text::trim(h);
    return t.empty() || text::to_lower_ascii(t) == "messages";
}

Rows drop_annotation_columns(const Rows& rows) {
    if (rows.empty())
        return rows;
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < rows[0].size(); ++c)
        if (!is_annotation_header(rows[0][c]))
            keep.push_back(c);
    Rows out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<std::string> r;
        r.reserve(keep.size());
        for (auto c : keep)
            r.push_back(c < row.size() ? row[c] : std::string{});
        while (!r.empty() && r.back().empty())
            r.pop_back();
        out.push_back(std::move(r));
    }
    out[0].resize(keep.size());  // header keeps every kept column
    return out;
}

// Key/value style sheets: blank rows dropped, short rows padded to arity.
Rows pad_rows(const Rows& rows, std::size_t width) {
    Rows out;
    for (const auto& r : rows) {
        if (r.empty())
            continue;
        out.push_back(r);
        if (out.back().size() < width)
            out.back().resize(width);
    }
    return out;
}

}  // namespace

UnitWorkbook import_xlsx(const std::filesystem::path& path, const SchemaConfig& schema, int schema_version) {
    std::string bytes;
    try {
        bytes = fsutil::read_file(path);
    } catch (const Error& e) {
        throw Error(Errc::UnreadableFile, e.message());
    }
    const detail::ZipReader zip(std::move(bytes));
    const auto sheet_paths = read_sheet_paths(zip);
    const auto shared = read_shared_strings(zip);

    auto require = [&](const std::string& name) -> const std::string& {
        const auto it = sheet_paths.find(name);
        if (it == sheet_paths.end())
            throw Error(Errc::MissingSheet, path.string() + " has no '" + name + "' sheet");
        return it->second;
    };

    SheetRows sheets;
    sheets.metric = pad_rows(read_sheet(zip, require("metric"), shared), 2);
    sheets.documents = drop_annotation_columns(read_sheet(zip, require("documents"), shared));
    if (const auto it = sheet_paths.find("map"); it != sheet_paths.end())
        sheets.map = pad_rows(read_sheet(zip, it->second, shared), 3);

    const auto metric = chmeta::metric_record([&] {
        MetricRows m;
        for (const auto& r : sheets.metric)
            if (r.size() >= 2)
                m.emplace_back(r[0], r[1]);
        return m;
    }());
    std::string unit_id = metric.shelfmark ? metric.shelfmark->unit_id() : text::slugify(path.stem().string());
    return assemble_workbook(std::move(unit_id), schema_version, sheets, schema);
}

}  // namespace chmeta
