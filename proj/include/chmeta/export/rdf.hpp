#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace chmeta::rdf {

struct Iri {
    std::string value;

    bool operator==(const Iri&) const = default;
};

/// `datatype` empty means xsd:string. A non-empty `lang` makes it a
/// language-tagged string and `datatype` is ignored.
struct Literal {
    std::string lexical;
    std::string datatype;
    std::string lang;

    bool operator==(const Literal&) const = default;
};

using Term = std::variant<Iri, Literal>;

struct GraphTriple {
    Iri subject;
    Iri predicate;
    Term object;

    bool operator==(const GraphTriple&) const = default;
};

namespace ns {
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kSkos = "http://www.w3.org/2004/02/skos/core#";
inline constexpr std::string_view kDc = "http://purl.org/dc/elements/1.1/";
inline constexpr std::string_view kDcterms = "http://purl.org/dc/terms/";
inline constexpr std::string_view kEdm = "http://www.europeana.eu/schemas/edm/";
inline constexpr std::string_view kOre = "http://www.openarchives.org/ore/terms/";
inline constexpr std::string_view kCrm = "http://www.cidoc-crm.org/cidoc-crm/";
}  // namespace ns

/// Prefixes written at the top of every Turtle document, in order.
struct Prefix {
    std::string_view name;
    std::string_view iri;
};
extern const std::vector<Prefix> kPrefixes;

Iri iri(std::string_view prefix_iri, std::string_view local);
inline Iri rdf_type() { return iri(ns::kRdf, "type"); }
Literal plain(std::string text);
Literal typed(std::string text, std::string_view xsd_local);

/// N-Triples form of a term; also the canonical sort key for objects.
std::string to_ntriples(const Term& t);

/// Subject, predicate, then N-Triples object.
bool triple_less(const GraphTriple& a, const GraphTriple& b);

/// Sorted, duplicate-free copy.
std::vector<GraphTriple> canonical(std::vector<GraphTriple> triples);

/// RFC 3987-shaped absolute IRI: scheme, ':', no whitespace or
/// characters Turtle forbids inside <>.
bool is_absolute_iri(std::string_view s) noexcept;

/// Deterministic Turtle: fixed prefix header, then one block per subject in
/// canonical triple order. Output depends only on the set of triples.
std::string serialize_turtle(std::vector<GraphTriple> triples);

}  // namespace chmeta::rdf
