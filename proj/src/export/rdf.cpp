#include "chmeta/export/rdf.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace chmeta::rdf {

const std::vector<Prefix> kPrefixes = {
    {"rdf", ns::kRdf},   {"rdfs", ns::kRdfs},       {"xsd", ns::kXsd}, {"owl", ns::kOwl}, {"skos", ns::kSkos},
    {"dc", ns::kDc},     {"dcterms", ns::kDcterms}, {"edm", ns::kEdm}, {"ore", ns::kOre}, {"crm", ns::kCrm},
};

Iri iri(std::string_view prefix_iri, std::string_view local) {
    std::string v(prefix_iri);
    v += local;
    return Iri{std::move(v)};
}

Literal plain(std::string text) {
    return Literal{std::move(text), {}, {}};
}

Literal typed(std::string text, std::string_view xsd_local) {
    return Literal{std::move(text), iri(ns::kXsd, xsd_local).value, {}};
}

namespace {

bool forbidden_in_iri(unsigned char c) {
    return c <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' || c == '|' || c == '^' ||
           c == '`' || c == '\\';
}

void append_iri_body(std::string& out, std::string_view v) {
    for (const char ch : v) {
        const auto c = static_cast<unsigned char>(ch);
        if (forbidden_in_iri(c))
            out += fmt::format("\\u{:04X}", c);
        else
            out += ch;
    }
}

void append_string_body(std::string& out, std::string_view v) {
    for (const char ch : v) {
        switch (ch) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(ch) < 0x20 || ch == 0x7f)
                out += fmt::format("\\u{:04X}", static_cast<unsigned char>(ch));
            else
                out += ch;
        }
    }
}

std::string bracketed(std::string_view v) {
    std::string out = "<";
    append_iri_body(out, v);
    out += '>';
    return out;
}

bool is_local_name(std::string_view s) {
    if (s.empty() || s.front() == '-')
        return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '-';
    });
}

std::string abbreviate(std::string_view v) {
    for (const auto& p : kPrefixes) {
        if (v.size() > p.iri.size() && v.substr(0, p.iri.size()) == p.iri) {
            const auto local = v.substr(p.iri.size());
            if (is_local_name(local))
                return std::string(p.name) + ":" + std::string(local);
        }
    }
    return bracketed(v);
}

std::string turtle_term(const Term& t) {
    if (const auto* i = std::get_if<Iri>(&t))
        return abbreviate(i->value);
    const auto& l = std::get<Literal>(t);
    std::string out = "\"";
    append_string_body(out, l.lexical);
    out += '"';
    if (!l.lang.empty())
        out += "@" + l.lang;
    else if (!l.datatype.empty() && l.datatype != iri(ns::kXsd, "string").value)
        out += "^^" + abbreviate(l.datatype);
    return out;
}

}  // namespace

std::string to_ntriples(const Term& t) {
    if (const auto* i = std::get_if<Iri>(&t))
        return bracketed(i->value);
    const auto& l = std::get<Literal>(t);
    std::string out = "\"";
    append_string_body(out, l.lexical);
    out += '"';
    if (!l.lang.empty())
        out += "@" + l.lang;
    else if (!l.datatype.empty() && l.datatype != iri(ns::kXsd, "string").value)
        out += "^^" + bracketed(l.datatype);
    return out;
}

bool triple_less(const GraphTriple& a, const GraphTriple& b) {
    if (a.subject.value != b.subject.value)
        return a.subject.value < b.subject.value;
    if (a.predicate.value != b.predicate.value)
        return a.predicate.value < b.predicate.value;
    return to_ntriples(a.object) < to_ntriples(b.object);
}

std::vector<GraphTriple> canonical(std::vector<GraphTriple> triples) {
    // plain-string literals equal xsd:string ones
    for (auto& t : triples)
        if (auto* l = std::get_if<Literal>(&t.object); l && l->lang.empty() && l->datatype == iri(ns::kXsd, "string").value)
            l->datatype.clear();
    std::sort(triples.begin(), triples.end(), triple_less);
    triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
    return triples;
}

bool is_absolute_iri(std::string_view s) noexcept {
    const auto colon = s.find(':');
    if (colon == std::string_view::npos || colon == 0)
        return false;
    const auto first = s.front();
    if (!((first >= 'a' && first <= 'z') || (first >= 'A' && first <= 'Z')))
        return false;
    for (const char c : s.substr(0, colon))
        if (!((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '+' || c == '-' ||
              c == '.'))
            return false;
    if (colon + 1 == s.size())
        return false;
    return std::none_of(s.begin(), s.end(), [](char c) { return forbidden_in_iri(static_cast<unsigned char>(c)); });
}

std::string serialize_turtle(std::vector<GraphTriple> triples) {
    triples = canonical(std::move(triples));
    std::string out;
    for (const auto& p : kPrefixes)
        out += fmt::format("@prefix {}: <{}> .\n", p.name, p.iri);

    const std::string type_iri = rdf_type().value;
    std::size_t i = 0;
    while (i < triples.size()) {
        const auto& subject = triples[i].subject.value;
        out += "\n" + abbreviate(subject);
        bool first_predicate = true;
        while (i < triples.size() && triples[i].subject.value == subject) {
            const auto& predicate = triples[i].predicate.value;
            out += first_predicate ? " " : " ;\n    ";
            first_predicate = false;
            out += predicate == type_iri ? std::string("a") : abbreviate(predicate);
            bool first_object = true;
            while (i < triples.size() && triples[i].subject.value == subject &&
                   triples[i].predicate.value == predicate) {
                out += first_object ? " " : ", ";
                first_object = false;
                out += turtle_term(triples[i].object);
                ++i;
            }
        }
        out += " .\n";
    }
    return out;
}

}  // namespace chmeta::rdf
