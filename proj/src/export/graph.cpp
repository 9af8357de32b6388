#include <set>

#include <fmt/format.h>

#include "chmeta/error.hpp"
#include "chmeta/export/export.hpp"
#include "chmeta/semantic/validate.hpp"

namespace chmeta {

using rdf::GraphTriple;
using rdf::Iri;
using rdf::Term;

namespace {

Iri edm(std::string_view l) { return rdf::iri(rdf::ns::kEdm, l); }
Iri ore(std::string_view l) { return rdf::iri(rdf::ns::kOre, l); }
Iri dc(std::string_view l) { return rdf::iri(rdf::ns::kDc, l); }
Iri dcterms(std::string_view l) { return rdf::iri(rdf::ns::kDcterms, l); }
Iri skos(std::string_view l) { return rdf::iri(rdf::ns::kSkos, l); }
Iri crm(std::string_view l) { return rdf::iri(rdf::ns::kCrm, l); }
Iri rdfs(std::string_view l) { return rdf::iri(rdf::ns::kRdfs, l); }

class Builder {
public:
    void add(const Iri& s, const Iri& p, Term o) { triples.push_back(GraphTriple{s, p, std::move(o)}); }
    void add_text(const Iri& s, const Iri& p, std::string_view v) {
        if (!v.empty())
            add(s, p, rdf::plain(std::string(v)));
    }

    std::vector<GraphTriple> triples;
};

void require_accepted(const UnitWorkbook& w, const SecCatalog& sec, const ExportOptions& options) {
    const auto v = validate_unit(w, sec, options.schema, "");
    if (v.report.verdict() != Verdict::Accepted)
        throw Error(Errc::UnitNotAccepted, "unit " + w.unit_id + " does not pass validation (" +
                                               summary_line(v.report.summary()) + ")");
}

std::optional<SecId> ref(const DocumentRecord& d, std::string_view field) {
    const auto raw = d.value(field);
    if (raw.empty())
        return std::nullopt;
    auto id = try_parse_sec_id(raw);
    if (!id)
        return std::nullopt;
    return *id;
}

// SEC entry node, with authority links as equivalences.
void describe_entry(Builder& b, const Iri& node, const SecEntry& e, const Iri& label, const Iri* alt) {
    b.add_text(node, label, e.preferred_name);
    if (alt != nullptr)
        for (const auto& v : e.variant_names)
            b.add_text(node, *alt, v);
    for (const auto& url : e.external_urls)
        if (rdf::is_absolute_iri(url))
            b.add(node, rdf::iri(rdf::ns::kOwl, "sameAs"), Iri{url});
}

std::string xsd_date(const std::chrono::year_month_day& d) {
    return fmt::format("{:04d}-{:02d}-{:02d}", static_cast<int>(d.year()), static_cast<unsigned>(d.month()),
                       static_cast<unsigned>(d.day()));
}

// Filled bindings for the cards a document declares, in map order.
std::vector<std::string> scans_of(const UnitWorkbook& w, const DocumentRecord& d) {
    std::vector<std::string> out;
    if (!w.map)
        return out;
    const auto ranges = try_parse_card_ranges(d.value(field::kCards));
    if (!ranges)
        return out;
    std::set<std::string> seen;
    for (const auto& b : *w.map) {
        if (b.scan_file.empty())
            continue;
        const bool declared = std::any_of(ranges->begin(), ranges->end(),
                                          [&](const CardRange& r) { return r.contains(b.card_no); });
        if (declared && seen.insert(b.scan_file).second)
            out.push_back(b.scan_file);
    }
    return out;
}

}  // namespace

GraphExport export_edm(const UnitWorkbook& w, const SecCatalog& sec, const IriPolicy& policy,
                       const ExportOptions& options) {
    require_accepted(w, sec, options);
    Builder b;
    GraphExport out;
    const Iri unit = policy.unit(w.unit_id);
    const Iri type = rdf::rdf_type();
    std::set<SecId> persons;
    std::set<SecId> places;

    for (std::size_t row = 0; row < w.documents.size(); ++row) {
        const auto& d = w.documents[row];
        const auto number = d.doc_no();
        if (!number)
            continue;
        const auto dn = number->to_string();
        const Iri cho = policy.document(w.unit_id, dn);
        b.add(cho, type, edm("ProvidedCHO"));
        b.add_text(cho, dc("identifier"), dn);
        b.add_text(cho, dc("title"), d.value(field::kTitle));
        b.add_text(cho, dc("date"), d.value(field::kDate));
        b.add_text(cho, dc("type"), label(number->category));
        b.add(cho, edm("type"), rdf::plain(number->category == Category::Portraits ? "IMAGE" : "TEXT"));
        b.add(cho, dcterms("isPartOf"), unit);
        if (const auto f = agent_field(number->category)) {
            if (const auto id = ref(d, *f)) {
                b.add(cho, dc("creator"), policy.person(*id));
                persons.insert(*id);
            } else {
                // free-text name column next to the *_sec one
                b.add_text(cho, dc("creator"), d.value(f->substr(0, f->size() - 4)));
            }
        }
        if (const auto id = ref(d, field::kPlaceSec)) {
            b.add(cho, dcterms("spatial"), policy.place(*id));
            places.insert(*id);
        }

        const auto scans = scans_of(w, d);
        if (scans.empty()) {
            out.warnings.push_back(Diagnostic{Severity::Warning, std::string(code::kNoScans), Sheet::Documents,
                                              record_row(row), std::string(field::kCards),
                                              "document " + dn + " has no bound scans; no aggregation written"});
            continue;
        }
        const Iri agg = policy.aggregation(w.unit_id, dn);
        b.add(agg, type, ore("Aggregation"));
        b.add(agg, edm("aggregatedCHO"), cho);
        b.add_text(agg, edm("dataProvider"), options.data_provider);
        if (!options.rights.empty())
            b.add(agg, edm("rights"), Iri{options.rights});
        for (std::size_t i = 0; i < scans.size(); ++i) {
            const Iri wr = policy.scan(w.unit_id, scans[i]);
            b.add(wr, type, edm("WebResource"));
            b.add(agg, i == 0 ? edm("isShownBy") : edm("hasView"), wr);
        }
    }

    const Iri alt = skos("altLabel");
    for (const auto id : persons)
        if (const auto* e = sec.resolve(id)) {
            const Iri node = policy.person(id);
            b.add(node, type, edm("Agent"));
            describe_entry(b, node, *e, skos("prefLabel"), &alt);
        }
    for (const auto id : places)
        if (const auto* e = sec.resolve(id)) {
            const Iri node = policy.place(id);
            b.add(node, type, edm("Place"));
            describe_entry(b, node, *e, skos("prefLabel"), &alt);
        }
    out.triples = rdf::canonical(std::move(b.triples));
    return out;
}

GraphExport export_cidoc(const UnitWorkbook& w, const SecCatalog& sec, const IriPolicy& policy,
                         const ExportOptions& options) {
    require_accepted(w, sec, options);
    Builder b;
    const Iri type = rdf::rdf_type();
    const Iri label_p = rdfs("label");
    const Iri unit = policy.unit(w.unit_id);
    b.add(unit, type, crm("E78_Curated_Holding"));
    if (const auto m = w.metric_record(); m.shelfmark)
        b.add_text(unit, label_p, m.shelfmark->to_string());

    std::set<SecId> persons;
    std::set<SecId> places;
    for (const auto& d : w.documents) {
        const auto number = d.doc_no();
        if (!number)
            continue;
        const auto dn = number->to_string();
        const Iri doc = policy.document(w.unit_id, dn);
        const Iri ev = policy.event(w.unit_id, dn);
        b.add(doc, type, crm("E31_Document"));
        b.add_text(doc, label_p, d.value(field::kTitle));
        b.add(doc, crm("P46i_forms_part_of"), unit);

        switch (options.mapping.of(number->category)) {
        case EventClass::Creation:
            b.add(ev, type, crm("E65_Creation"));
            b.add(doc, crm("P94i_was_created_by"), ev);
            break;
        case EventClass::Issuing:
            b.add(ev, type, crm("E65_Creation"));
            b.add(ev, crm("P2_has_type"), rdf::iri(policy.base, "type/issuing"));
            b.add(doc, crm("P94i_was_created_by"), ev);
            break;
        case EventClass::Production:
            b.add(ev, type, crm("E12_Production"));
            b.add(doc, crm("P108i_was_produced_by"), ev);
            break;
        }

        if (const auto f = agent_field(number->category))
            if (const auto id = ref(d, *f)) {
                b.add(ev, crm("P14_carried_out_by"), policy.person(*id));
                persons.insert(*id);
            }
        if (number->category == Category::OutgoingCorrespondence ||
            number->category == Category::IncomingCorrespondence)
            if (const auto id = ref(d, field::kRecipientSec)) {
                b.add(ev, crm("P11_had_participant"), policy.person(*id));
                persons.insert(*id);
            }
        if (const auto id = ref(d, field::kPlaceSec)) {
            b.add(ev, crm("P7_took_place_at"), policy.place(*id));
            places.insert(*id);
        }

        const auto raw_date = d.value(field::kDate);
        if (auto date = try_parse_date_expression(raw_date)) {
            const auto span = interval_of(*date);
            const Iri ts = policy.time_span(w.unit_id, dn);
            b.add(ev, crm("P4_has_time-span"), ts);
            b.add(ts, type, crm("E52_Time-Span"));
            b.add_text(ts, label_p, raw_date);
            b.add(ts, crm("P82a_begin_of_the_begin"), rdf::typed(xsd_date(span.first), "date"));
            if (span.last)
                b.add(ts, crm("P82b_end_of_the_end"), rdf::typed(xsd_date(*span.last), "date"));
        }
    }

    for (const auto id : persons)
        if (const auto* e = sec.resolve(id)) {
            const Iri node = policy.person(id);
            b.add(node, type, crm("E21_Person"));
            describe_entry(b, node, *e, label_p, nullptr);
        }
    for (const auto id : places)
        if (const auto* e = sec.resolve(id)) {
            const Iri node = policy.place(id);
            b.add(node, type, crm("E53_Place"));
            describe_entry(b, node, *e, label_p, nullptr);
        }
    return GraphExport{rdf::canonical(std::move(b.triples)), {}};
}

}  // namespace chmeta
