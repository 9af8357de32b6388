#include <algorithm>

#include <fmt/format.h>

#include "chmeta/error.hpp"
#include "chmeta/export/export.hpp"
#include "chmeta/semantic/validate.hpp"

namespace chmeta {

namespace {

// Escapes markup characters and replaces code points XML 1.0 cannot carry.
std::string xml_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (const char ch : s) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default:
            if (static_cast<unsigned char>(ch) < 0x20 && ch != '\t' && ch != '\n' && ch != '\r')
                out += "\xEF\xBF\xBD";
            else
                out += ch;
        }
    }
    return out;
}

class XmlWriter {
public:
    void open(std::string_view name, std::initializer_list<std::pair<std::string_view, std::string>> attrs = {}) {
        indent();
        out_ += "<" + std::string(name) + attributes(attrs) + ">\n";
        stack_.emplace_back(name);
    }

    void close() {
        const auto name = stack_.back();
        stack_.pop_back();
        indent();
        out_ += "</" + name + ">\n";
    }

    void leaf(std::string_view name, std::string_view text,
              std::initializer_list<std::pair<std::string_view, std::string>> attrs = {}) {
        indent();
        out_ += "<" + std::string(name) + attributes(attrs) + ">" + xml_escape(text) + "</" + std::string(name) +
                ">\n";
    }

    std::string take() { return std::move(out_); }

    void raw(std::string_view s) { out_ += s; }

private:
    static std::string attributes(std::initializer_list<std::pair<std::string_view, std::string>> attrs) {
        std::string out;
        for (const auto& [k, v] : attrs)
            if (!v.empty())
                out += " " + std::string(k) + "=\"" + xml_escape(v) + "\"";
        return out;
    }

    void indent() { out_.append(stack_.size() * 2, ' '); }

    std::string out_;
    std::vector<std::string> stack_;
};

std::string iso_day(const std::chrono::year_month_day& d) {
    return fmt::format("{:04d}-{:02d}-{:02d}", static_cast<int>(d.year()), static_cast<unsigned>(d.month()),
                       static_cast<unsigned>(d.day()));
}

struct AuthorityRef {
    std::string url;
    std::string source;
};

// First authority link of the preferred kind: GND for persons, Geonames for
// places, falling back to any recognized authority.
AuthorityRef authority_of(const SecEntry& e) {
    const Authority preferred = e.kind() == SecKind::Person ? Authority::Gnd : Authority::Geonames;
    AuthorityRef fallback;
    for (const auto& url : e.external_urls) {
        const auto lint = lint_authority_url(url);
        if (!lint.authority)
            continue;
        const AuthorityRef r{url, *lint.authority == Authority::Gnd        ? "GND"
                                  : *lint.authority == Authority::Geonames ? "geonames"
                                                                           : "wikidata"};
        if (*lint.authority == preferred)
            return r;
        if (fallback.url.empty())
            fallback = r;
    }
    return fallback;
}

struct NameRef {
    std::string_view role;
    std::string_view text_field;
    std::string_view sec_field;
};

constexpr NameRef kPersonRefs[] = {
    {"sender", field::kSender, field::kSenderSec},
    {"recipient", field::kRecipient, field::kRecipientSec},
    {"issuer", field::kIssuer, field::kIssuerSec},
    {"author", field::kAuthor, field::kAuthorSec},
};

void write_names(XmlWriter& x, const DocumentRecord& d, const SecCatalog& sec) {
    for (const auto& r : kPersonRefs) {
        const SecEntry* e = nullptr;
        if (auto id = try_parse_sec_id(d.value(r.sec_field)))
            e = sec.resolve(*id);
        if (e != nullptr) {
            const auto a = authority_of(*e);
            x.leaf("persname", e->preferred_name,
                   {{"role", std::string(r.role)}, {"authfilenumber", a.url}, {"source", a.source}});
        } else if (!d.value(r.text_field).empty()) {
            x.leaf("persname", d.value(r.text_field), {{"role", std::string(r.role)}});
        }
    }
    const SecEntry* place = nullptr;
    if (auto id = try_parse_sec_id(d.value(field::kPlaceSec)))
        place = sec.resolve(*id);
    if (place != nullptr) {
        const auto a = authority_of(*place);
        x.leaf("geogname", place->preferred_name, {{"authfilenumber", a.url}, {"source", a.source}});
    } else if (!d.value(field::kPlace).empty()) {
        x.leaf("geogname", d.value(field::kPlace));
    }
}

}  // namespace

std::string export_ead(const std::vector<UnitWorkbook>& units, const SecCatalog& sec, const CollectionMeta& meta,
                       const ExportOptions& options) {
    if (units.empty())
        throw Error(Errc::EmptyInput, "no units to export");
    for (const auto& w : units) {
        const auto v = validate_unit(w, sec, options.schema, "");
        if (v.report.verdict() != Verdict::Accepted)
            throw Error(Errc::UnitNotAccepted, "unit " + w.unit_id + " does not pass validation (" +
                                                   summary_line(v.report.summary()) + ")");
    }

    XmlWriter x;
    x.raw("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    x.open("ead", {{"xmlns", "urn:isbn:1-931666-22-9"}, {"xmlns:xlink", "http://www.w3.org/1999/xlink"}});
    x.open("eadheader");
    x.leaf("eadid", meta.id);
    x.open("filedesc");
    x.open("titlestmt");
    x.leaf("titleproper", meta.title);
    x.close();
    x.close();
    x.close();

    x.open("archdesc", {{"level", "collection"}});
    x.open("did");
    x.leaf("unittitle", meta.title);
    x.leaf("unitid", meta.id);
    x.close();
    x.open("dsc");
    for (const auto& w : units) {
        const auto m = w.metric_record();
        x.open("c", {{"level", "file"}, {"id", "unit-" + w.unit_id}});
        x.open("did");
        x.leaf("unittitle", m.shelfmark ? m.shelfmark->name : m.title);
        x.leaf("unitid", m.shelfmark ? m.shelfmark->to_string() : w.unit_id);
        if (m.card_count) {
            x.open("physdesc");
            x.leaf("extent", std::to_string(*m.card_count) + " cards");
            x.close();
        }
        x.close();

        std::vector<std::pair<DocumentNumber, const DocumentRecord*>> docs;
        for (const auto& d : w.documents)
            if (const auto n = d.doc_no())
                docs.emplace_back(*n, &d);
        std::stable_sort(docs.begin(), docs.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [number, d] : docs) {
            x.open("c", {{"level", "item"}});
            x.open("did");
            x.leaf("unittitle", d->value(field::kTitle));
            x.leaf("unitid", number.to_string());
            const auto raw_date = d->value(field::kDate);
            if (auto date = try_parse_date_expression(raw_date)) {
                const auto span = interval_of(*date);
                const auto normal = iso_day(span.first) + "/" + (span.last ? iso_day(*span.last) : "..");
                x.leaf("unitdate", raw_date, {{"normal", normal}});
            }
            x.close();
            x.open("controlaccess");
            x.leaf("genreform", label(number.category), {{"source", "local"}});
            write_names(x, *d, sec);
            x.close();
            x.close();
        }
        x.close();
    }
    x.close();
    x.close();
    x.close();
    return x.take();
}

}  // namespace chmeta
