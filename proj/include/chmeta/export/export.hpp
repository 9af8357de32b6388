#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "chmeta/check/diagnostic.hpp"
#include "chmeta/export/iri_policy.hpp"
#include "chmeta/export/rdf.hpp"
#include "chmeta/ingest/workbook.hpp"
#include "chmeta/model/category.hpp"
#include "chmeta/model/schema.hpp"
#include "chmeta/sec/catalog.hpp"

namespace chmeta {

// --- category mapping --------------------------------------------------------

/// How a document came about, as an event class.
enum class EventClass { Creation, Issuing, Production };

std::string_view to_string(EventClass e) noexcept;

/// Per-category event class; index is category digit - 1.
struct CidocMapping {
    std::array<EventClass, 9> event{};

    EventClass of(Category c) const noexcept { return event[static_cast<std::size_t>(to_digit(c) - 1)]; }
};

/// Creation for 1-3 and 7-9, issuing for 4-5, production for 6.
CidocMapping default_cidoc_mapping();

/// INI file with a `[cidoc]` section of `<digit> = creation|issuing|production`
/// lines; categories not listed keep their default.
/// Throws Error(ConfigInvalid).
CidocMapping load_cidoc_mapping(const std::filesystem::path& path);

/// Field naming the agent who brought the document about: sender for
/// correspondence (2, 7), author for creative works (3), issuer for 4-5.
std::optional<std::string_view> agent_field(Category c) noexcept;

// --- graph exports -----------------------------------------------------------

struct ExportOptions {
    SchemaConfig schema = default_schema();
    CidocMapping mapping = default_cidoc_mapping();
    std::string rights = "http://rightsstatements.org/vocab/CNE/1.0/";
    std::string data_provider = "Sammlung Autographa";
};

struct GraphExport {
    std::vector<rdf::GraphTriple> triples;
    Diagnostics warnings;
};

/// Per document: an edm:ProvidedCHO; an edm:WebResource for each filled map
/// binding of its cards; and, when it has any, one ore:Aggregation tying
/// them together. Documents without scans get a NO_SCANS warning.
/// Throws Error(UnitNotAccepted) when the unit does not pass validation.
GraphExport export_edm(const UnitWorkbook& w, const SecCatalog& sec, const IriPolicy& policy,
                       const ExportOptions& options = {});

/// Per document: an event of the mapped class with its agent (P14), other
/// correspondent (P11), time-span (P4, from the date interval) and place (P7).
/// Throws Error(UnitNotAccepted).
GraphExport export_cidoc(const UnitWorkbook& w, const SecCatalog& sec, const IriPolicy& policy,
                         const ExportOptions& options = {});

// --- EAD ---------------------------------------------------------------------

struct CollectionMeta {
    std::string id = "SA";
    std::string title = "Sammlung Autographa";
};

/// One EAD 2002 finding aid: a file-level component per unit (in the given
/// order) with an item-level component per document (in doc_no order).
/// Throws Error(EmptyInput) or Error(UnitNotAccepted).
std::string export_ead(const std::vector<UnitWorkbook>& units, const SecCatalog& sec, const CollectionMeta& meta,
                       const ExportOptions& options = {});

// --- Dublin Core --------------------------------------------------------------

/// title, identifier, format, extent; format and extent only when filled.
/// Throws Error(MetricIncomplete).
std::vector<std::pair<std::string, std::string>> export_dc(const UnitWorkbook& w);

std::string render_dc_csv(const std::vector<std::pair<std::string, std::string>>& pairs);

}  // namespace chmeta
