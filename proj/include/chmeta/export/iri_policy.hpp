#pragma once

#include <map>
#include <string>
#include <string_view>

#include "chmeta/export/rdf.hpp"
#include "chmeta/sec/sec_id.hpp"

namespace chmeta {

enum class EntityClass { Unit, Document, Person, Place, Scan, Aggregation, Event, TimeSpan };

std::string_view to_string(EntityClass c) noexcept;

/// Local IRI minting. Templates use {base}, {unit}, {doc}, {id} and {file};
/// every substituted value is percent-encoded, so '/' inside an id cannot
/// run into the template's own separators.
struct IriPolicy {
    std::string base = "https://archive.example.org/";
    std::map<EntityClass, std::string> templates = default_templates();

    static std::map<EntityClass, std::string> default_templates();

    rdf::Iri unit(std::string_view unit_id) const;
    rdf::Iri document(std::string_view unit_id, std::string_view doc_no) const;
    rdf::Iri person(SecId id) const;
    rdf::Iri place(SecId id) const;
    rdf::Iri scan(std::string_view unit_id, std::string_view scan_file) const;
    rdf::Iri aggregation(std::string_view unit_id, std::string_view doc_no) const;
    rdf::Iri event(std::string_view unit_id, std::string_view doc_no) const;
    rdf::Iri time_span(std::string_view unit_id, std::string_view doc_no) const;
};

/// Placeholders each class must use for its IRIs to be injective.
std::vector<std::string_view> required_placeholders(EntityClass c);

/// Throws Error(InvalidIriPolicy) when the base is not an absolute IRI
/// ending in '/' or '#', a template is missing or lacks a required
/// placeholder, or two classes share a template.
void validate_policy(const IriPolicy& p);

}  // namespace chmeta
