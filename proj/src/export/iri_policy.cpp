#include "chmeta/export/iri_policy.hpp"

#include <set>

#include "chmeta/error.hpp"
#include "chmeta/util/text.hpp"

namespace chmeta {

namespace {

constexpr EntityClass kClasses[] = {EntityClass::Unit,  EntityClass::Document,    EntityClass::Person,
                                    EntityClass::Place, EntityClass::Scan,        EntityClass::Aggregation,
                                    EntityClass::Event, EntityClass::TimeSpan};

struct Values {
    std::string_view unit;
    std::string_view doc;
    std::string_view id;
    std::string_view file;
};

std::string expand(const IriPolicy& p, EntityClass c, const Values& v) {
    const auto it = p.templates.find(c);
    if (it == p.templates.end())
        throw Error(Errc::InvalidIriPolicy, "no IRI template for " + std::string(to_string(c)));
    const std::string& t = it->second;
    std::string out;
    std::size_t i = 0;
    while (i < t.size()) {
        if (t[i] == '{') {
            const auto close = t.find('}', i);
            if (close == std::string::npos)
                throw Error(Errc::InvalidIriPolicy, "unterminated placeholder in '" + t + "'");
            const auto name = std::string_view(t).substr(i + 1, close - i - 1);
            if (name == "base")
                out += p.base;
            else if (name == "unit")
                out += text::percent_encode(v.unit);
            else if (name == "doc")
                out += text::percent_encode(v.doc);
            else if (name == "id")
                out += text::percent_encode(v.id);
            else if (name == "file")
                out += text::percent_encode(v.file);
            else
                throw Error(Errc::InvalidIriPolicy, "unknown placeholder {" + std::string(name) + "}");
            i = close + 1;
        } else {
            out += t[i++];
        }
    }
    return out;
}

}  // namespace

std::string_view to_string(EntityClass c) noexcept {
    switch (c) {
    case EntityClass::Unit: return "unit";
    case EntityClass::Document: return "document";
    case EntityClass::Person: return "person";
    case EntityClass::Place: return "place";
    case EntityClass::Scan: return "scan";
    case EntityClass::Aggregation: return "aggregation";
    case EntityClass::Event: return "event";
    case EntityClass::TimeSpan: return "time-span";
    }
    return "";
}

std::map<EntityClass, std::string> IriPolicy::default_templates() {
    return {
        {EntityClass::Unit, "{base}unit/{unit}"},
        {EntityClass::Document, "{base}unit/{unit}/doc/{doc}"},
        {EntityClass::Person, "{base}person/{id}"},
        {EntityClass::Place, "{base}place/{id}"},
        {EntityClass::Scan, "{base}unit/{unit}/scan/{file}"},
        {EntityClass::Aggregation, "{base}unit/{unit}/doc/{doc}/aggregation"},
        {EntityClass::Event, "{base}unit/{unit}/doc/{doc}/event"},
        {EntityClass::TimeSpan, "{base}unit/{unit}/doc/{doc}/event/timespan"},
    };
}

rdf::Iri IriPolicy::unit(std::string_view unit_id) const {
    return {expand(*this, EntityClass::Unit, {unit_id, {}, {}, {}})};
}
rdf::Iri IriPolicy::document(std::string_view unit_id, std::string_view doc_no) const {
    return {expand(*this, EntityClass::Document, {unit_id, doc_no, {}, {}})};
}
rdf::Iri IriPolicy::person(SecId id) const {
    return {expand(*this, EntityClass::Person, {{}, {}, id.to_string(), {}})};
}
rdf::Iri IriPolicy::place(SecId id) const {
    return {expand(*this, EntityClass::Place, {{}, {}, id.to_string(), {}})};
}
rdf::Iri IriPolicy::scan(std::string_view unit_id, std::string_view scan_file) const {
    return {expand(*this, EntityClass::Scan, {unit_id, {}, {}, scan_file})};
}
rdf::Iri IriPolicy::aggregation(std::string_view unit_id, std::string_view doc_no) const {
    return {expand(*this, EntityClass::Aggregation, {unit_id, doc_no, {}, {}})};
}
rdf::Iri IriPolicy::event(std::string_view unit_id, std::string_view doc_no) const {
    return {expand(*this, EntityClass::Event, {unit_id, doc_no, {}, {}})};
}
rdf::Iri IriPolicy::time_span(std::string_view unit_id, std::string_view doc_no) const {
    return {expand(*this, EntityClass::TimeSpan, {unit_id, doc_no, {}, {}})};
}

std::vector<std::string_view> required_placeholders(EntityClass c) {
    switch (c) {
    case EntityClass::Unit: return {"{unit}"};
    case EntityClass::Person:
    case EntityClass::Place: return {"{id}"};
    case EntityClass::Scan: return {"{unit}", "{file}"};
    default: return {"{unit}", "{doc}"};
    }
}

void validate_policy(const IriPolicy& p) {
    if (!rdf::is_absolute_iri(p.base) || (p.base.back() != '/' && p.base.back() != '#'))
        throw Error(Errc::InvalidIriPolicy, "base '" + p.base + "' must be an absolute IRI ending in '/' or '#'");
    std::set<std::string> seen;
    for (const auto c : kClasses) {
        const auto it = p.templates.find(c);
        if (it == p.templates.end())
            throw Error(Errc::InvalidIriPolicy, "no IRI template for " + std::string(to_string(c)));
        for (const auto ph : required_placeholders(c))
            if (it->second.find(ph) == std::string::npos)
                throw Error(Errc::InvalidIriPolicy, std::string(to_string(c)) + " template '" + it->second +
                                                        "' lacks " + std::string(ph));
        if (!seen.insert(it->second).second)
            throw Error(Errc::InvalidIriPolicy, "template '" + it->second + "' is used for two entity classes");
        // a sample expansion must itself be a valid IRI
        const auto sample = expand(p, c, {"u", "1.1", "P-000001", "f.tif"});
        if (!rdf::is_absolute_iri(sample))
            throw Error(Errc::InvalidIriPolicy, std::string(to_string(c)) + " template yields '" + sample +
                                                    "', not an absolute IRI");
    }
}

}  // namespace chmeta
