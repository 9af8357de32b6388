#include <algorithm>
#include <fstream>

#include <gtest/gtest.h>

#include "chmeta/error.hpp"
#include "chmeta/export/export.hpp"
#include "chmeta/util/fs.hpp"
#include "corpus.hpp"
#include "turtle_reader.hpp"
#include "xml_tree.hpp"

using namespace chmeta;
using testsupport::flat_iri;
using testsupport::flat_literal;
using testsupport::flatten;
using testsupport::FlatTriple;
using testsupport::TripleSet;

namespace {

const std::string kRdfType = std::string(rdf::ns::kRdf) + "type";
const std::string kEdm = std::string(rdf::ns::kEdm);
const std::string kCrm = std::string(rdf::ns::kCrm);

std::size_t count_type(const TripleSet& g, const std::string& cls) {
    return static_cast<std::size_t>(std::count_if(g.begin(), g.end(), [&](const FlatTriple& t) {
        return t.p == flat_iri(kRdfType) && t.o == flat_iri(cls);
    }));
}

std::vector<std::string> objects(const TripleSet& g, const std::string& s, const std::string& p) {
    std::vector<std::string> out;
    for (const auto& t : g)
        if (t.s == flat_iri(s) && t.p == flat_iri(p))
            out.push_back(t.o);
    return out;
}

SecEntry person(std::uint32_t n, std::string name, std::vector<std::string> urls = {}) {
    SecEntry e;
    e.id = SecId{SecKind::Person, n};
    e.preferred_name = std::move(name);
    e.external_urls = std::move(urls);
    return e;
}

SecCatalog small_sec() {
    SecEntry prag;
    prag.id = SecId{SecKind::Place, 1};
    prag.preferred_name = "Prag";
    prag.external_urls = {"https://www.geonames.org/3067696"};
    return SecCatalog({person(1, "Keppler, Johannes", {"https://d-nb.info/gnd/118561448"}), person(2, "Galilei, Galileo")},
                      {prag});
}

UnitWorkbook unit(std::vector<std::vector<std::pair<std::string, std::string>>> rows,
                  std::vector<ScanBinding> map = {}) {
    auto w = new_unit_workbook(parse_shelfmark("SA, Test"), default_schema());
    for (auto& [k, v] : w.metric)
        if (k == "title")
            v = "Papers";
    for (const auto& cells : rows) {
        DocumentRecord d;
        for (const auto& c : w.columns)
            d.values[c] = "";
        for (const auto& [k, v] : cells)
            d.values[k] = v;
        w.documents.push_back(std::move(d));
    }
    w.map = std::move(map);
    return w;
}

UnitWorkbook keppler() {
    return load_unit_workbook(testsupport::fixtures_dir() / "units" / "sa-keppler-johannes", default_schema());
}

SecCatalog fixture_sec() { return load_sec_catalog(testsupport::fixtures_dir() / "sec"); }

}  // namespace

TEST(Edm, TwoScansOneDocument) {
    const auto w = unit({{{"doc_no", "2.1"}, {"title", "Letter"}, {"cards", "1"}}},
                        {{1, "recto", "a.tif"}, {1, "verso", "b.tif"}});
    const auto out = export_edm(w, small_sec(), IriPolicy{});
    const auto g = flatten(out.triples);
    EXPECT_EQ(count_type(g, kEdm + "ProvidedCHO"), 1u);
    EXPECT_EQ(count_type(g, kEdm + "WebResource"), 2u);
    EXPECT_EQ(count_type(g, std::string(rdf::ns::kOre) + "Aggregation"), 1u);
    EXPECT_TRUE(out.warnings.empty());
    const IriPolicy p;
    const auto agg = p.aggregation(w.unit_id, "2.1").value;
    EXPECT_EQ(objects(g, agg, kEdm + "isShownBy"), std::vector<std::string>{flat_iri(p.scan(w.unit_id, "a.tif").value)});
    EXPECT_EQ(objects(g, agg, kEdm + "hasView"), std::vector<std::string>{flat_iri(p.scan(w.unit_id, "b.tif").value)});
    EXPECT_EQ(objects(g, agg, kEdm + "aggregatedCHO"),
              std::vector<std::string>{flat_iri(p.document(w.unit_id, "2.1").value)});
}

TEST(Edm, NoScansWarnsAndSkipsAggregation) {
    const auto w = unit({{{"doc_no", "2.1"}, {"title", "Letter"}, {"cards", "1"}}}, {{1, "recto", ""}});
    const auto out = export_edm(w, small_sec(), IriPolicy{});
    const auto g = flatten(out.triples);
    EXPECT_EQ(count_type(g, kEdm + "ProvidedCHO"), 1u);
    EXPECT_EQ(count_type(g, std::string(rdf::ns::kOre) + "Aggregation"), 0u);
    ASSERT_EQ(out.warnings.size(), 1u);
    EXPECT_EQ(out.warnings[0].code, code::kNoScans);
    EXPECT_EQ(out.warnings[0].row, 2);
}

TEST(Edm, RejectedUnitRefused) {
    const auto w = unit({{{"doc_no", "2.1"}}});
    try {
        export_edm(w, small_sec(), IriPolicy{});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::UnitNotAccepted);
    }
    EXPECT_THROW(export_cidoc(w, small_sec(), IriPolicy{}), Error);
}

TEST(Edm, FixtureCounts) {
    const auto out = export_edm(keppler(), fixture_sec(), IriPolicy{});
    const auto g = flatten(out.triples);
    EXPECT_EQ(count_type(g, kEdm + "ProvidedCHO"), 3u);
    EXPECT_EQ(count_type(g, kEdm + "WebResource"), 7u);
    EXPECT_EQ(count_type(g, std::string(rdf::ns::kOre) + "Aggregation"), 3u);
    EXPECT_EQ(count_type(g, kEdm + "Agent"), 1u);
    EXPECT_EQ(count_type(g, kEdm + "Place"), 1u);
    const IriPolicy p;
    const auto portrait = p.document("sa-keppler-johannes", "1.1").value;
    EXPECT_EQ(objects(g, portrait, kEdm + "type"), std::vector<std::string>{flat_literal("IMAGE", "", "")});
}

TEST(Cidoc, YearDateBecomesFullYearSpan) {
    const auto w = unit({{{"doc_no", "2.1"}, {"title", "Letter"}, {"date", "1820"}, {"sender_sec", "P-000001"}}});
    const auto g = flatten(export_cidoc(w, small_sec(), IriPolicy{}).triples);
    const IriPolicy p;
    const auto ev = p.event(w.unit_id, "2.1").value;
    const auto ts = p.time_span(w.unit_id, "2.1").value;
    const std::string xsd_date = std::string(rdf::ns::kXsd) + "date";
    EXPECT_EQ(objects(g, ev, kRdfType), std::vector<std::string>{flat_iri(kCrm + "E65_Creation")});
    EXPECT_EQ(objects(g, ev, kCrm + "P4_has_time-span"), std::vector<std::string>{flat_iri(ts)});
    EXPECT_EQ(objects(g, ts, kCrm + "P82a_begin_of_the_begin"),
              std::vector<std::string>{flat_literal("1820-01-01", xsd_date, "")});
    EXPECT_EQ(objects(g, ts, kCrm + "P82b_end_of_the_end"),
              std::vector<std::string>{flat_literal("1820-12-31", xsd_date, "")});
    EXPECT_EQ(objects(g, ev, kCrm + "P14_carried_out_by"),
              std::vector<std::string>{flat_iri(p.person(SecId{SecKind::Person, 1}).value)});
}

TEST(Cidoc, NoDateNoTimeSpan) {
    const auto w = unit({{{"doc_no", "2.1"}, {"title", "Letter"}}});
    const auto g = flatten(export_cidoc(w, small_sec(), IriPolicy{}).triples);
    EXPECT_EQ(count_type(g, kCrm + "E52_Time-Span"), 0u);
    EXPECT_EQ(count_type(g, kCrm + "E31_Document"), 1u);
}

TEST(Cidoc, OpenRangeHasNoEnd) {
    const auto w = unit({{{"doc_no", "2.1"}, {"title", "Letter"}, {"date", "1820/.."}}});
    const auto g = flatten(export_cidoc(w, small_sec(), IriPolicy{}).triples);
    const auto ts = IriPolicy{}.time_span(w.unit_id, "2.1").value;
    EXPECT_EQ(objects(g, ts, kCrm + "P82a_begin_of_the_begin").size(), 1u);
    EXPECT_TRUE(objects(g, ts, kCrm + "P82b_end_of_the_end").empty());
}

TEST(Cidoc, IncomingLetterAgentIsSender) {
    const auto w = unit({{{"doc_no", "7.1"},
                          {"title", "Reply"},
                          {"sender_sec", "P-000002"},
                          {"recipient_sec", "P-000001"},
                          {"place_sec", "L-000001"}}});
    const auto g = flatten(export_cidoc(w, small_sec(), IriPolicy{}).triples);
    const IriPolicy p;
    const auto ev = p.event(w.unit_id, "7.1").value;
    EXPECT_EQ(objects(g, ev, kCrm + "P14_carried_out_by"),
              std::vector<std::string>{flat_iri(p.person(SecId{SecKind::Person, 2}).value)});
    EXPECT_EQ(objects(g, ev, kCrm + "P11_had_participant"),
              std::vector<std::string>{flat_iri(p.person(SecId{SecKind::Person, 1}).value)});
    EXPECT_EQ(objects(g, ev, kCrm + "P7_took_place_at"),
              std::vector<std::string>{flat_iri(p.place(SecId{SecKind::Place, 1}).value)});
    EXPECT_EQ(count_type(g, kCrm + "E21_Person"), 2u);
    EXPECT_EQ(count_type(g, kCrm + "E53_Place"), 1u);
}

TEST(Cidoc, EventClassFollowsMapping) {
    const auto w = unit({{{"doc_no", "4.1"}, {"title", "Passport"}}, {{"doc_no", "6.1"}, {"title", "Print"}}});
    const auto g = flatten(export_cidoc(w, small_sec(), IriPolicy{}).triples);
    const IriPolicy p;
    const auto issuing = p.event(w.unit_id, "4.1").value;
    EXPECT_EQ(objects(g, issuing, kRdfType), std::vector<std::string>{flat_iri(kCrm + "E65_Creation")});
    EXPECT_EQ(objects(g, issuing, kCrm + "P2_has_type"), std::vector<std::string>{flat_iri(p.base + "type/issuing")});
    EXPECT_EQ(objects(g, p.event(w.unit_id, "6.1").value, kRdfType),
              std::vector<std::string>{flat_iri(kCrm + "E12_Production")});
    EXPECT_EQ(objects(g, p.document(w.unit_id, "6.1").value, kCrm + "P108i_was_produced_by").size(), 1u);

    ExportOptions o;
    o.mapping.event[5] = EventClass::Creation;
    const auto g2 = flatten(export_cidoc(w, small_sec(), IriPolicy{}, o).triples);
    EXPECT_EQ(objects(g2, p.event(w.unit_id, "6.1").value, kRdfType),
              std::vector<std::string>{flat_iri(kCrm + "E65_Creation")});
}

TEST(Turtle, RoundTripsThroughIndependentReader) {
    const auto sec = fixture_sec();
    for (const auto& ts : {export_edm(keppler(), sec, IriPolicy{}).triples,
                           export_cidoc(keppler(), sec, IriPolicy{}).triples}) {
        const auto doc = rdf::serialize_turtle(ts);
        EXPECT_EQ(testsupport::read_turtle(doc), flatten(ts));
    }
}

TEST(Turtle, HostileLiteralsRoundTrip) {
    const std::vector<std::string> texts = {"a\"b", "line\nbreak", "back\\slash", "tab\there", "\"\"\"",
                                            "Mästlin", "ends with quote\"", "", "cr\rx", "'single'"};
    std::vector<rdf::GraphTriple> ts;
    int n = 0;
    for (const auto& t : texts)
        ts.push_back({rdf::Iri{"https://x.example/s" + std::to_string(n++)}, rdf::Iri{"https://x.example/p"},
                      rdf::plain(t)});
    ts.push_back({rdf::Iri{"https://x.example/s"}, rdf::Iri{"https://x.example/p"}, rdf::Literal{"x", "", "de"}});
    ts.push_back({rdf::Iri{"https://x.example/a%20b"}, rdf::Iri{"https://x.example/p"},
                  rdf::typed("1820-01-01", "date")});
    EXPECT_EQ(testsupport::read_turtle(rdf::serialize_turtle(ts)), flatten(ts));
}

TEST(Turtle, OrderIndependent) {
    auto ts = export_cidoc(keppler(), fixture_sec(), IriPolicy{}).triples;
    const auto ref = rdf::serialize_turtle(ts);
    testsupport::Rng rng(5);
    for (int i = 0; i < 20; ++i) {
        std::shuffle(ts.begin(), ts.end(), rng);
        auto dup = ts;
        dup.push_back(ts.front());
        EXPECT_EQ(rdf::serialize_turtle(dup), ref);
    }
}

TEST(Turtle, EmptyGraphIsPrefixHeaderOnly) {
    const auto doc = rdf::serialize_turtle({});
    EXPECT_TRUE(testsupport::read_turtle(doc).empty());
    std::string header;
    for (const auto& p : rdf::kPrefixes)
        header += "@prefix " + std::string(p.name) + ": <" + std::string(p.iri) + "> .\n";
    EXPECT_EQ(doc.substr(0, header.size()), header);
    EXPECT_EQ(doc.find_first_not_of("\n", header.size()), std::string::npos);
}

TEST(IriPolicy, DefaultIsValid) {
    EXPECT_NO_THROW(validate_policy(IriPolicy{}));
    EXPECT_EQ(IriPolicy{}.unit("sa-a").value, "https://archive.example.org/unit/sa-a");
    EXPECT_EQ(IriPolicy{}.person(SecId{SecKind::Person, 12}).value, "https://archive.example.org/person/P-000012");
}

TEST(IriPolicy, RejectsBrokenPolicies) {
    auto expect_invalid = [](const IriPolicy& p) {
        try {
            validate_policy(p);
            ADD_FAILURE() << "accepted";
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::InvalidIriPolicy);
        }
    };
    IriPolicy p;
    p.base = "archive/";
    expect_invalid(p);
    p = {};
    p.base = "https://x.example/no-slash";
    expect_invalid(p);
    p = {};
    p.templates[EntityClass::Document] = "{base}unit/{unit}";
    expect_invalid(p);
    p = {};
    p.templates[EntityClass::Scan] = "{base}scan/{file}";
    expect_invalid(p);
    p = {};
    p.templates.erase(EntityClass::Event);
    expect_invalid(p);
    p = {};
    p.templates[EntityClass::Unit] = "{base}unit/{unit}/{bogus}";
    expect_invalid(p);
}

TEST(IriPolicy, InjectiveOverHostileValues) {
    const IriPolicy p;
    std::set<std::string> seen;
    const std::vector<std::string> units = {"sa-a", "sa-a/doc", "sa a", "sa-ä", "sa-a%2F"};
    const std::vector<std::string> docs = {"1.1", "1.1/aggregation", "2.1", "1.10"};
    for (const auto& u : units) {
        EXPECT_TRUE(seen.insert(p.unit(u).value).second) << u;
        EXPECT_TRUE(rdf::is_absolute_iri(p.unit(u).value));
        for (const auto& d : docs)
            for (const auto& iri : {p.document(u, d), p.aggregation(u, d), p.event(u, d), p.time_span(u, d)}) {
                EXPECT_TRUE(seen.insert(iri.value).second) << iri.value;
                EXPECT_TRUE(rdf::is_absolute_iri(iri.value)) << iri.value;
            }
        for (const auto& f : {"a.tif", "sub/a.tif", "a b.tif"})
            EXPECT_TRUE(seen.insert(p.scan(u, f).value).second);
    }
}

TEST(Ead, OneUnitTwoDocs) {
    const auto w = unit({{{"doc_no", "2.2"}, {"title", "Second"}, {"date", "1820"}},
                         {{"doc_no", "2.1"}, {"title", "First & <only>"}, {"sender_sec", "P-000001"}}});
    const auto xml = export_ead({w}, small_sec(), CollectionMeta{});
    const auto doc = testsupport::read_xml(xml);
    ASSERT_TRUE(doc.well_formed) << doc.error;
    EXPECT_TRUE(testsupport::ead_violations(doc.root).empty());
    const auto* dsc = doc.root.first("archdesc")->first("dsc");
    ASSERT_NE(dsc, nullptr);
    const auto files = dsc->all("c");
    ASSERT_EQ(files.size(), 1u);
    EXPECT_EQ(files[0]->attr("id"), "unit-" + w.unit_id);
    const auto items = files[0]->all("c");
    ASSERT_EQ(items.size(), 2u);
    EXPECT_EQ(items[0]->first("did")->first("unitid")->text, "2.1");
    EXPECT_EQ(items[0]->first("did")->first("unittitle")->text, "First & <only>");
    EXPECT_EQ(items[1]->first("did")->first("unitdate")->attr("normal"), "1820-01-01/1820-12-31");
    const auto* pers = items[0]->first("controlaccess")->first("persname");
    ASSERT_NE(pers, nullptr);
    EXPECT_EQ(pers->attr("source"), "GND");
    EXPECT_EQ(pers->attr("authfilenumber"), "https://d-nb.info/gnd/118561448");
    EXPECT_EQ(pers->attr("role"), "sender");
}

TEST(Ead, FixtureAndSyntheticUnitsPassWalker) {
    testsupport::Rng rng(3);
    const auto sec = testsupport::synthetic_sec(40, 10);
    std::vector<UnitWorkbook> units;
    for (int i = 0; i < 5; ++i)
        units.push_back(testsupport::clean_unit(rng, "Name" + std::to_string(i), 12, sec, i % 2 == 0));
    const auto doc = testsupport::read_xml(export_ead(units, sec, CollectionMeta{}));
    ASSERT_TRUE(doc.well_formed) << doc.error;
    EXPECT_EQ(testsupport::ead_violations(doc.root), std::vector<std::string>{});
    EXPECT_EQ(doc.root.first("archdesc")->first("dsc")->all("c").size(), 5u);

    const auto k = testsupport::read_xml(export_ead({keppler()}, fixture_sec(), CollectionMeta{}));
    ASSERT_TRUE(k.well_formed) << k.error;
    EXPECT_TRUE(testsupport::ead_violations(k.root).empty());
}

TEST(Ead, EmptyInputRefused) {
    try {
        export_ead({}, small_sec(), CollectionMeta{});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::EmptyInput);
    }
}

TEST(Ead, WalkerCatchesBrokenStructure) {
    const auto bad = testsupport::read_xml(
        "<ead xmlns=\"urn:isbn:1-931666-22-9\"><archdesc level=\"collection\"><did><unittitle>x</unittitle></did>"
        "<dsc><c level=\"item\"><did><unitdate normal=\"1820\">1820</unitdate></did></c></dsc></archdesc></ead>");
    ASSERT_TRUE(bad.well_formed);
    EXPECT_GE(testsupport::ead_violations(bad.root).size(), 3u);
}

TEST(DublinCore, FixtureHasFourPairs) {
    const auto pairs = export_dc(keppler());
    const std::vector<std::pair<std::string, std::string>> expected = {
        {"title", "Letters of J. Keppler"},
        {"identifier", "SA, Keppler, Johannes"},
        {"format", "Folder, 2 leaves"},
        {"extent", "6 cards"}};
    EXPECT_EQ(pairs, expected);
    EXPECT_EQ(render_dc_csv(pairs).substr(0, 11), "term,value\n");
    EXPECT_NE(render_dc_csv(pairs).find("dc:identifier,\"SA, Keppler, Johannes\""), std::string::npos);
}

TEST(DublinCore, IncompleteMetricRefused) {
    auto w = unit({});
    for (auto& [k, v] : w.metric)
        if (k == "title")
            v = "";
    try {
        export_dc(w);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::MetricIncomplete);
    }
    EXPECT_EQ(export_dc(unit({})).size(), 2u);
}

TEST(CidocMapping, DefaultsAndFile) {
    const auto d = default_cidoc_mapping();
    EXPECT_EQ(d.of(Category::Portraits), EventClass::Creation);
    EXPECT_EQ(d.of(Category::PersonalMaterials), EventClass::Issuing);
    EXPECT_EQ(d.of(Category::HistoricalMaterials), EventClass::Issuing);
    EXPECT_EQ(d.of(Category::PrintedMaterials), EventClass::Production);
    EXPECT_EQ(d.of(Category::LibraryMaterials), EventClass::Creation);

    testsupport::TempDir t("mapping");
    fsutil::write_file(t / "m.ini", "[cidoc]\n9 = production\n4 = Creation\n");
    const auto m = load_cidoc_mapping(t / "m.ini");
    EXPECT_EQ(m.of(Category::LibraryMaterials), EventClass::Production);
    EXPECT_EQ(m.of(Category::PersonalMaterials), EventClass::Creation);
    EXPECT_EQ(m.of(Category::HistoricalMaterials), EventClass::Issuing);

    for (const auto* bad : {"[cidoc]\n0 = creation\n", "[cidoc]\n3 = destruction\n", "[cidoc\n"}) {
        fsutil::write_file(t / "bad.ini", bad);
        try {
            load_cidoc_mapping(t / "bad.ini");
            ADD_FAILURE() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::ConfigInvalid);
        }
    }
}

TEST(AgentField, ByCategory) {
    EXPECT_EQ(agent_field(Category::OutgoingCorrespondence), field::kSenderSec);
    EXPECT_EQ(agent_field(Category::IncomingCorrespondence), field::kSenderSec);
    EXPECT_EQ(agent_field(Category::CreativeWorks), field::kAuthorSec);
    EXPECT_EQ(agent_field(Category::PersonalMaterials), field::kIssuerSec);
    EXPECT_EQ(agent_field(Category::HistoricalMaterials), field::kIssuerSec);
    EXPECT_FALSE(agent_field(Category::Portraits));
    EXPECT_FALSE(agent_field(Category::LibraryMaterials));
}
