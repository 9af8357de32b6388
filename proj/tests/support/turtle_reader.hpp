#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "chmeta/export/rdf.hpp"

namespace testsupport {

/// Term in a flat comparable form:
///   IRI      "I " + iri
///   literal  "L " + datatype + " " + lang + " " + lexical   (datatype empty for plain strings)
///   blank    "B " + label
struct FlatTriple {
    std::string s;
    std::string p;
    std::string o;
    auto operator<=>(const FlatTriple&) const = default;
};

using TripleSet = std::set<FlatTriple>;

struct TurtleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Recursive-descent Turtle reader written against the W3C grammar, kept
/// separate from the library's serializer. Throws TurtleError with a line
/// number on anything it does not accept.
TripleSet read_turtle(std::string_view doc);

std::string flat_iri(std::string_view iri);
std::string flat_literal(std::string_view lexical, std::string_view datatype, std::string_view lang);

/// The library's in-memory graph in the same flat form.
TripleSet flatten(const std::vector<chmeta::rdf::GraphTriple>& triples);

}  // namespace testsupport
