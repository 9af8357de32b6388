#include "chmeta/model/schema.hpp"

#include <fstream>
#include <set>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "chmeta/error.hpp"
#include "chmeta/util/text.hpp"

namespace chmeta {

namespace {

constexpr std::pair<ValueKind, std::string_view> kKindNames[] = {
    {ValueKind::Text, "text"},
    {ValueKind::DocumentNumber, "document-number"},
    {ValueKind::DateExpression, "date-expression"},
    {ValueKind::SecPersonRef, "sec-person-ref"},
    {ValueKind::SecPlaceRef, "sec-place-ref"},
    {ValueKind::CardRange, "card-range"},
    {ValueKind::Url, "url"},
    {ValueKind::Integer, "integer"},
};

FieldSpec make(std::string_view id, std::string_view label, bool mandatory, CategorySet cats, ValueKind kind) {
    return FieldSpec{std::string(id), std::string(label), mandatory, cats, kind};
}

// Strips TOML string quotes; bare values pass through.
std::string unquote(std::string_view v) {
    v = text::trim(v);
    if (v.size() >= 2 && (v.front() == '"' || v.front() == '\'') && v.back() == v.front())
        return std::string(v.substr(1, v.size() - 2));
    return std::string(v);
}

[[noreturn]] void config_error(const std::string& msg) {
    throw Error(Errc::ConfigInvalid, msg);
}

bool parse_bool(const std::string& key, std::string_view v) {
    const auto s = unquote(v);
    if (s == "true")
        return true;
    if (s == "false")
        return false;
    config_error(key + ": expected true or false, got '" + s + "'");
}

CategorySet parse_categories(const std::string& key, std::string_view v) {
    auto s = text::trim(v);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        config_error(key + ": expected an array like [1, 2], got '" + std::string(s) + "'");
    s = text::trim(s.substr(1, s.size() - 2));
    CategorySet set;
    if (s.empty())
        return set;
    for (const auto& item : text::split(s, ',')) {
        const auto n = text::parse_unsigned(text::trim(item));
        const auto c = n ? category_from_code(static_cast<int>(*n)) : std::nullopt;
        if (!c)
            config_error(key + ": category '" + std::string(text::trim(item)) + "' is not 1-9");
        set.insert(*c);
    }
    return set;
}

}  // namespace

std::string_view to_string(ValueKind kind) noexcept {
    for (const auto& [k, name] : kKindNames)
        if (k == kind)
            return name;
    return "text";
}

std::optional<ValueKind> value_kind_from_string(std::string_view s) noexcept {
    for (const auto& [k, name] : kKindNames)
        if (name == s)
            return k;
    return std::nullopt;
}

std::string_view to_string(SequencingMode mode) noexcept {
    return mode == SequencingMode::PerCategory ? "per-category" : "per-unit";
}

const FieldSpec* SchemaConfig::find(std::string_view id) const noexcept {
    for (const auto& f : fields)
        if (f.id == id)
            return &f;
    return nullptr;
}

std::vector<std::string> SchemaConfig::field_ids() const {
    std::vector<std::string> ids;
    ids.reserve(fields.size());
    for (const auto& f : fields)
        ids.push_back(f.id);
    return ids;
}

SchemaConfig default_schema() {
    using C = Category;
    const CategorySet all = CategorySet::all();
    const CategorySet correspondence{C::OutgoingCorrespondence, C::IncomingCorrespondence};
    const CategorySet official{C::PersonalMaterials, C::HistoricalMaterials};
    const CategorySet creative{C::CreativeWorks};

    SchemaConfig s;
    s.version = 1;
    s.fields = {
        make(field::kDocNo, "Document number", true, all, ValueKind::DocumentNumber),
        make(field::kTitle, "What is it / document title", true, all, ValueKind::Text),
        make(field::kDate, "Date", false, all, ValueKind::DateExpression),
        make(field::kDateRemarks, "Date remarks", false, all, ValueKind::Text),
        make(field::kSender, "Sender", false, correspondence, ValueKind::Text),
        make(field::kSenderSec, "Sender SEC ID", false, correspondence, ValueKind::SecPersonRef),
        make(field::kRecipient, "Recipient", false, correspondence, ValueKind::Text),
        make(field::kRecipientSec, "Recipient SEC ID", false, correspondence, ValueKind::SecPersonRef),
        make(field::kIssuer, "Issuer", false, official, ValueKind::Text),
        make(field::kIssuerSec, "Issuer SEC ID", false, official, ValueKind::SecPersonRef),
        make(field::kAuthor, "Author", false, creative, ValueKind::Text),
        make(field::kAuthorSec, "Author SEC ID", false, creative, ValueKind::SecPersonRef),
        make(field::kPlace, "Place", false, all, ValueKind::Text),
        make(field::kPlaceSec, "Place SEC ID", false, all, ValueKind::SecPlaceRef),
        make(field::kCards, "Cards", false, all, ValueKind::CardRange),
        make(field::kRemarks, "Remarks", false, all, ValueKind::Text),
    };
    return s;
}

void validate_schema(const SchemaConfig& schema) {
    if (schema.version < 1)
        config_error("schema version must be >= 1");
    std::set<std::string> seen;
    for (const auto& f : schema.fields) {
        if (f.id.empty())
            config_error("field with empty id");
        if (!seen.insert(f.id).second)
            config_error("duplicate field id '" + f.id + "'");
        if (f.applicability.empty())
            config_error("field '" + f.id + "' applies to no category");
    }
    for (const auto& builtin : default_schema().fields) {
        const auto* f = schema.find(builtin.id);
        if (f == nullptr)
            config_error("built-in field '" + builtin.id + "' missing");
        if (f->kind != builtin.kind)
            config_error("built-in field '" + builtin.id + "' cannot change kind");
    }
    const auto* doc_no = schema.find(field::kDocNo);
    if (!doc_no->mandatory || !(doc_no->applicability == CategorySet::all()))
        config_error("doc_no must stay mandatory for all categories");
}

SchemaConfig parse_schema(std::istream& in) {
    namespace pt = boost::property_tree;
    pt::ptree tree;
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        config_error(std::string("schema file: ") + e.what());
    }

    SchemaConfig schema = default_schema();
    for (const auto& [key, node] : tree) {
        if (key == "version") {
            const auto v = text::parse_unsigned(unquote(node.data()));
            if (!v || *v == 0 || *v > 1'000'000)
                config_error("version: expected a positive integer");
            schema.version = static_cast<int>(*v);
        } else if (key == "sequencing_mode") {
            const auto v = unquote(node.data());
            if (v == "per-category")
                schema.sequencing_mode = SequencingMode::PerCategory;
            else if (v == "per-unit")
                schema.sequencing_mode = SequencingMode::PerUnit;
            else
                config_error("sequencing_mode: expected per-category or per-unit, got '" + v + "'");
        } else if (key.rfind("fields.", 0) == 0) {
            const std::string id = key.substr(7);
            if (id.empty())
                config_error("empty field table name");
            FieldSpec* target = nullptr;
            for (auto& f : schema.fields)
                if (f.id == id)
                    target = &f;
            if (target == nullptr) {
                schema.fields.push_back(FieldSpec{id, id, false, CategorySet::all(), ValueKind::Text});
                target = &schema.fields.back();
            }
            for (const auto& [prop, value] : node) {
                const std::string where = key + "." + prop;
                if (prop == "label") {
                    target->label = unquote(value.data());
                } else if (prop == "mandatory") {
                    target->mandatory = parse_bool(where, value.data());
                } else if (prop == "categories") {
                    target->applicability = parse_categories(where, value.data());
                } else if (prop == "kind") {
                    const auto k = value_kind_from_string(unquote(value.data()));
                    if (!k)
                        config_error(where + ": unknown kind '" + unquote(value.data()) + "'");
                    target->kind = *k;
                } else {
                    config_error("unknown key '" + where + "'");
                }
            }
        } else {
            config_error("unknown key '" + key + "'");
        }
    }
    validate_schema(schema);
    return schema;
}

SchemaConfig load_schema(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        config_error("cannot open schema file " + path.string());
    return parse_schema(in);
}

std::vector<std::string> applicable_fields(Category c, const SchemaConfig& schema) {
    std::vector<std::string> out;
    for (const auto& f : schema.fields)
        if (f.applicability.contains(c))
            out.push_back(f.id);
    return out;
}

std::vector<std::string> blocked_fields(Category c, const SchemaConfig& schema) {
    std::vector<std::string> out;
    for (const auto& f : schema.fields)
        if (!f.applicability.contains(c))
            out.push_back(f.id);
    return out;
}

}  // namespace chmeta
