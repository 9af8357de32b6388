#include <algorithm>
#include <map>

#include "chmeta/error.hpp"
#include "chmeta/ingest/csv.hpp"
#include "chmeta/sec/catalog.hpp"
#include "chmeta/util/fs.hpp"
#include "chmeta/util/text.hpp"

namespace chmeta {

namespace fs = std::filesystem;

namespace {

std::vector<std::string> entry_columns(SecKind kind) {
    if (kind == SecKind::Person)
        return {"id", "preferred_name", "variant_names", "birth", "death", "external_urls", "notes"};
    return {"id", "preferred_name", "variant_names", "external_urls", "notes"};
}

std::vector<std::string> proposal_columns(SecKind kind) {
    auto cols = entry_columns(kind);
    cols.insert(cols.end(), {"target", "proposer", "status"});
    return cols;
}

std::vector<std::string> split_list(std::string_view s) {
    std::vector<std::string> out;
    for (const auto& part : text::split(s, '|')) {
        const auto t = text::trim(part);
        if (!t.empty())
            out.emplace_back(t);
    }
    return out;
}

// Header-addressed view of one CSV table.
class Table {
public:
    Table(const fs::path& file, std::vector<std::string> expected) : file_(file) {
        const auto data = fsutil::read_file(file);
        if (!text::is_valid_utf8(data))
            throw Error(Errc::EncodingError, file.string() + " is not valid UTF-8");
        try {
            rows_ = csv::parse(data);
        } catch (const Error& e) {
            throw Error(Errc::MalformedCsv, file.string() + ": " + e.message());
        }
        if (rows_.empty())
            throw Error(Errc::MalformedCsv, file.string() + ": missing header row");
        for (std::size_t i = 0; i < rows_[0].size(); ++i)
            index_[rows_[0][i]] = i;
        for (const auto& col : expected)
            if (!index_.count(col))
                throw Error(Errc::MalformedCsv, file.string() + ": header lacks column '" + col + "'");
        if (index_.size() != rows_[0].size() || rows_[0].size() != expected.size())
            throw Error(Errc::MalformedCsv, file.string() + ": unexpected or repeated header columns");
    }

    std::size_t records() const { return rows_.size() - 1; }

    std::string cell(std::size_t record, std::string_view column) const {
        const auto& row = rows_[record + 1];
        const auto c = index_.at(std::string(column));
        return c < row.size() ? row[c] : std::string{};
    }

    void check_width(std::size_t record) const {
        if (rows_[record + 1].size() > index_.size())
            throw Error(Errc::MalformedCsv, where(record) + ": too many cells");
    }

    std::string where(std::size_t record) const {
        return file_.string() + " row " + std::to_string(record_row(record));
    }

private:
    fs::path file_;
    std::vector<csv::Row> rows_;
    std::map<std::string, std::size_t> index_;
};

SecEntry entry_from(const Table& t, std::size_t r, SecKind kind, bool id_required) {
    t.check_width(r);
    SecEntry e;
    const auto id_text = t.cell(r, "id");
    if (id_required) {
        auto id = try_parse_sec_id(id_text);
        if (!id || id->kind != kind)
            throw Error(Errc::InvalidSecId, t.where(r) + ": '" + id_text + "' is not a " +
                                                std::string(to_string(kind)) + " id");
        e.id = *id;
    } else {
        e.id = SecId{kind, 1};
    }
    e.preferred_name = t.cell(r, "preferred_name");
    e.variant_names = split_list(t.cell(r, "variant_names"));
    if (kind == SecKind::Person) {
        e.birth = t.cell(r, "birth");
        e.death = t.cell(r, "death");
    }
    e.external_urls = split_list(t.cell(r, "external_urls"));
    e.notes = t.cell(r, "notes");
    return e;
}

std::vector<SecEntry> load_entries(const fs::path& file, SecKind kind) {
    if (!fs::exists(file))
        throw Error(Errc::MissingSheet, file.string() + " not found");
    const Table t(file, entry_columns(kind));
    std::vector<SecEntry> out;
    out.reserve(t.records());
    for (std::size_t r = 0; r < t.records(); ++r)
        out.push_back(entry_from(t, r, kind, true));
    return out;
}

csv::Row entry_cells(const SecEntry& e, SecKind kind, std::string id_text) {
    csv::Row row{std::move(id_text), e.preferred_name, text::join(e.variant_names, "|")};
    if (kind == SecKind::Person) {
        row.push_back(e.birth);
        row.push_back(e.death);
    }
    row.push_back(text::join(e.external_urls, "|"));
    row.push_back(e.notes);
    return row;
}

}  // namespace

std::string render_entries_csv(const std::vector<SecEntry>& entries, SecKind kind) {
    std::string out = csv::format_row(entry_columns(kind));
    for (const auto& e : entries)
        out += csv::format_row(entry_cells(e, kind, e.id.to_string()));
    return out;
}

SecCatalog load_sec_catalog(const fs::path& dir) {
    auto persons = load_entries(dir / sec_file::kPersons, SecKind::Person);
    auto places = load_entries(dir / sec_file::kPlaces, SecKind::Place);
    std::vector<SecId> retired;
    if (const auto file = dir / sec_file::kRetired; fs::exists(file)) {
        const Table t(file, {"id"});
        for (std::size_t r = 0; r < t.records(); ++r) {
            auto id = try_parse_sec_id(t.cell(r, "id"));
            if (!id)
                throw Error(Errc::InvalidSecId, t.where(r) + ": " + id.failure().message);
            retired.push_back(*id);
        }
    }
    return SecCatalog(std::move(persons), std::move(places), std::move(retired));
}

void save_sec_catalog(const SecCatalog& catalog, const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw Error(Errc::IoError, "cannot create " + dir.string() + ": " + ec.message());
    fsutil::write_file(dir / sec_file::kPersons, render_entries_csv(catalog.persons(), SecKind::Person));
    fsutil::write_file(dir / sec_file::kPlaces, render_entries_csv(catalog.places(), SecKind::Place));
    if (!catalog.retired().empty() || fs::exists(dir / sec_file::kRetired)) {
        std::string out = csv::format_row({"id"});
        for (const auto& id : catalog.retired())
            out += csv::format_row({id.to_string()});
        fsutil::write_file(dir / sec_file::kRetired, out);
    }
}

std::vector<Proposal> load_proposals(const fs::path& file, SecKind kind) {
    std::vector<Proposal> out;
    if (!fs::exists(file))
        return out;
    const Table t(file, proposal_columns(kind));
    for (std::size_t r = 0; r < t.records(); ++r) {
        Proposal p;
        p.payload = entry_from(t, r, kind, false);
        p.proposal_id = t.cell(r, "id");
        if (p.proposal_id.empty())
            p.proposal_id = std::to_string(record_row(r));
        const auto target = text::trim(t.cell(r, "target"));
        if (!target.empty() && target != "new") {
            auto id = try_parse_sec_id(target);
            if (!id)
                throw Error(Errc::InvalidSecId, t.where(r) + ": target " + id.failure().message);
            p.target = *id;
        }
        p.proposer = t.cell(r, "proposer");
        const auto status = proposal_status_from_string(text::trim(t.cell(r, "status")));
        if (!status)
            throw Error(Errc::MalformedCsv, t.where(r) + ": unknown status '" + t.cell(r, "status") + "'");
        p.status = *status;
        out.push_back(std::move(p));
    }
    return out;
}

void save_proposals(const std::vector<Proposal>& proposals, SecKind kind, const fs::path& file) {
    std::string out = csv::format_row(proposal_columns(kind));
    for (const auto& p : proposals) {
        auto row = entry_cells(p.payload, kind, p.proposal_id);
        row.push_back(p.target ? p.target->to_string() : "new");
        row.push_back(p.proposer);
        row.push_back(std::string(to_string(p.status)));
        out += csv::format_row(row);
    }
    fsutil::write_file(file, out);
}

}  // namespace chmeta
