#include "chmeta/ingest/workbook.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "chmeta/error.hpp"
#include "chmeta/ingest/csv.hpp"
#include "chmeta/util/fs.hpp"
#include "chmeta/util/text.hpp"

namespace chmeta {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string read_sheet(const fs::path& dir, std::string_view name) {
    const auto path = dir / name;
    if (!fs::exists(path))
        throw Error(Errc::MissingSheet, path.string() + " not found");
    auto data = fsutil::read_file(path);
    if (!text::is_valid_utf8(data))
        throw Error(Errc::EncodingError, path.string() + " is not valid UTF-8");
    return data;
}

std::vector<std::vector<std::string>> parse_sheet(std::string_view data, std::string_view name) {
    try {
        return csv::parse(data);
    } catch (const Error& e) {
        throw Error(Errc::MalformedCsv, std::string(name) + ": " + e.what());
    }
}

MetricRows metric_from_rows(const std::vector<std::vector<std::string>>& rows) {
    MetricRows metric;
    std::size_t first = 0;
    if (!rows.empty() && rows[0].size() == 2 && rows[0][0] == "key" && rows[0][1] == "value")
        first = 1;
    for (std::size_t i = first; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (r.size() > 2)
            throw Error(Errc::MalformedCsv, "metric row " + std::to_string(i + 1) + " has more than 2 cells");
        if (r.size() == 1 && r[0].empty())
            continue;  // blank line
        metric.emplace_back(r[0], r.size() == 2 ? r[1] : std::string{});
    }
    return metric;
}

}  // namespace

std::vector<ScanBinding> parse_map_rows(const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty() || rows[0] != std::vector<std::string>{"card_no", "role", "scan_file"})
        throw Error(Errc::InvalidMapRow, "map row 1: header must be card_no,role,scan_file");
    std::vector<ScanBinding> out;
    std::map<std::pair<std::uint32_t, std::string>, std::size_t> seen;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& r = rows[i];
        const auto row_no = std::to_string(i + 1);
        if (r.size() != 3)
            throw Error(Errc::InvalidMapRow, "map row " + row_no + ": expected 3 cells");
        const auto card = text::parse_unsigned(text::trim(r[0]));
        if (!card || *card == 0 || *card > kMaxCardNo)
            throw Error(Errc::InvalidMapRow, "map row " + row_no + ": card_no '" + r[0] + "' is not a card number (1.." + std::to_string(kMaxCardNo) + ")");
        if (r[1].empty())
            throw Error(Errc::InvalidMapRow, "map row " + row_no + ": empty role");
        ScanBinding b{static_cast<std::uint32_t>(*card), r[1], r[2]};
        const auto [it, inserted] = seen.emplace(std::make_pair(b.card_no, b.role), i + 1);
        if (!inserted)
            throw Error(Errc::DuplicateBinding, "map row " + row_no + ": card " + std::to_string(b.card_no) +
                                                    " role '" + b.role + "' already bound at row " +
                                                    std::to_string(it->second));
        out.push_back(std::move(b));
    }
    return out;
}

std::vector<ScanBinding> parse_map_csv(std::string_view data) {
    return parse_map_rows(parse_sheet(data, sheet_file::kMap));
}

UnitWorkbook assemble_workbook(std::string unit_id, int schema_version, const SheetRows& sheets,
                               const SchemaConfig& schema) {
    if (schema_version > schema.version)
        throw Error(Errc::SchemaDowngrade, "workbook schema version " + std::to_string(schema_version) +
                                               " is newer than schema version " + std::to_string(schema.version));
    UnitWorkbook w;
    w.unit_id = std::move(unit_id);
    w.schema_version = schema_version;
    w.metric = metric_from_rows(sheets.metric);

    if (sheets.documents.empty())
        throw Error(Errc::MalformedCsv, "documents sheet has no header row");
    w.columns = sheets.documents[0];
    std::set<std::string_view> seen;
    for (const auto& col : w.columns) {
        if (!seen.insert(col).second)
            throw Error(Errc::DuplicateHeader, "documents header repeats '" + col + "'");
        if (schema.find(col) == nullptr)
            throw Error(Errc::HeaderUnknownField, "documents header has unknown field '" + col + "'");
    }
    w.documents.reserve(sheets.documents.size() - 1);
    for (std::size_t i = 1; i < sheets.documents.size(); ++i) {
        const auto& cells = sheets.documents[i];
        if (cells.size() > w.columns.size())
            throw Error(Errc::MalformedCsv, "documents row " + std::to_string(i + 1) + " has " +
                                                std::to_string(cells.size()) + " cells for " +
                                                std::to_string(w.columns.size()) + " columns");
        DocumentRecord rec;
        for (std::size_t c = 0; c < w.columns.size(); ++c)
            rec.values.emplace(w.columns[c], c < cells.size() ? cells[c] : std::string{});
        w.documents.push_back(std::move(rec));
    }
    if (sheets.map)
        w.map = parse_map_rows(*sheets.map);
    return w;
}

UnitWorkbook new_unit_workbook(const Shelfmark& shelfmark, const SchemaConfig& schema) {
    UnitWorkbook w;
    w.unit_id = shelfmark.unit_id();
    w.schema_version = schema.version;
    w.metric = {
        {std::string(metric_key::kTitle), ""},
        {std::string(metric_key::kShelfmark), shelfmark.to_string()},
        {std::string(metric_key::kCardCount), ""},
        {std::string(metric_key::kFormat), ""},
        {std::string(metric_key::kRemarks), ""},
    };
    w.columns = schema.field_ids();
    return w;
}

UnitWorkbook load_unit_workbook(const fs::path& dir, const SchemaConfig& schema) {
    const auto manifest_path = dir / sheet_file::kManifest;
    if (!fs::exists(manifest_path))
        throw Error(Errc::MissingManifest, manifest_path.string() + " not found");
    const auto manifest_text = fsutil::read_file(manifest_path);
    if (!text::is_valid_utf8(manifest_text))
        throw Error(Errc::EncodingError, manifest_path.string() + " is not valid UTF-8");

    std::string unit_id;
    int schema_version = 0;
    bool has_map = false;
    try {
        const auto m = json::parse(manifest_text);
        unit_id = m.at("unit_id").get<std::string>();
        schema_version = m.at("schema_version").get<int>();
        const auto sheets = m.at("sheets").get<std::vector<std::string>>();
        for (const auto& s : sheets) {
            if (s == "map")
                has_map = true;
            else if (s != "metric" && s != "documents")
                throw Error(Errc::MalformedManifest, "unknown sheet '" + s + "'");
        }
        if (std::find(sheets.begin(), sheets.end(), "metric") == sheets.end() ||
            std::find(sheets.begin(), sheets.end(), "documents") == sheets.end())
            throw Error(Errc::MalformedManifest, "sheet inventory lacks metric or documents");
    } catch (const json::exception& e) {
        throw Error(Errc::MalformedManifest, manifest_path.string() + ": " + e.what());
    }
    if (unit_id.empty() || schema_version < 1)
        throw Error(Errc::MalformedManifest, manifest_path.string() + ": empty unit_id or bad schema_version");

    SheetRows sheets;
    sheets.metric = parse_sheet(read_sheet(dir, sheet_file::kMetric), sheet_file::kMetric);
    sheets.documents = parse_sheet(read_sheet(dir, sheet_file::kDocuments), sheet_file::kDocuments);
    if (has_map)
        sheets.map = parse_sheet(read_sheet(dir, sheet_file::kMap), sheet_file::kMap);
    return assemble_workbook(std::move(unit_id), schema_version, sheets, schema);
}

std::string render_manifest(const UnitWorkbook& w) {
    json sheets = json::array({"metric", "documents"});
    if (w.map)
        sheets.push_back("map");
    const json m = {
        {"unit_id", w.unit_id},
        {"shelfmark", std::string(metric_value(w.metric, metric_key::kShelfmark))},
        {"schema_version", w.schema_version},
        {"sheets", sheets},
    };
    return m.dump(2) + "\n";
}

std::string render_metric_csv(const UnitWorkbook& w) {
    std::string out = csv::format_row({"key", "value"});
    for (const auto& [k, v] : w.metric)
        out += csv::format_row({k, v});
    return out;
}

std::string render_documents_csv(const UnitWorkbook& w) {
    std::string out = csv::format_row(w.columns);
    csv::Row cells(w.columns.size());
    for (const auto& rec : w.documents) {
        for (std::size_t c = 0; c < w.columns.size(); ++c)
            cells[c] = std::string(rec.value(w.columns[c]));
        out += csv::format_row(cells);
    }
    return out;
}

std::string render_map_csv(const std::vector<ScanBinding>& map) {
    std::string out = csv::format_row({"card_no", "role", "scan_file"});
    for (const auto& b : map)
        out += csv::format_row({std::to_string(b.card_no), b.role, b.scan_file});
    return out;
}

void save_unit_workbook(const UnitWorkbook& w, const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw Error(Errc::IoError, "cannot create " + dir.string() + ": " + ec.message());
    fsutil::write_file(dir / sheet_file::kMetric, render_metric_csv(w));
    fsutil::write_file(dir / sheet_file::kDocuments, render_documents_csv(w));
    if (w.map)
        fsutil::write_file(dir / sheet_file::kMap, render_map_csv(*w.map));
    // manifest last: a directory with a manifest is a complete unit
    fsutil::write_file(dir / sheet_file::kManifest, render_manifest(w));
}

UnitWorkbook migrate_workbook(UnitWorkbook w, const SchemaConfig& schema) {
    if (w.schema_version > schema.version)
        throw Error(Errc::SchemaDowngrade, "workbook " + w.unit_id + " is at schema version " +
                                               std::to_string(w.schema_version) + ", schema is " +
                                               std::to_string(schema.version));
    for (const auto& f : schema.fields) {
        if (std::find(w.columns.begin(), w.columns.end(), f.id) != w.columns.end())
            continue;
        w.columns.push_back(f.id);
        for (auto& rec : w.documents)
            rec.values.emplace(f.id, std::string{});
    }
    w.schema_version = schema.version;
    return w;
}

}  // namespace chmeta
