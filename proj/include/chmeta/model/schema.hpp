#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chmeta/model/category.hpp"

namespace chmeta {

enum class ValueKind {
    Text,
    DocumentNumber,
    DateExpression,
    SecPersonRef,
    SecPlaceRef,
    CardRange,
    Url,
    Integer,
};

std::string_view to_string(ValueKind kind) noexcept;
std::optional<ValueKind> value_kind_from_string(std::string_view s) noexcept;

struct FieldSpec {
    std::string id;
    std::string label;
    bool mandatory = false;
    CategorySet applicability = CategorySet::all();
    ValueKind kind = ValueKind::Text;

    bool operator==(const FieldSpec&) const = default;
};

enum class SequencingMode { PerCategory, PerUnit };

std::string_view to_string(SequencingMode mode) noexcept;

/// Ordered field list for the documents sheet. Field order drives column
/// order of new workbooks and the order of per-row diagnostics.
struct SchemaConfig {
    int version = 1;
    std::vector<FieldSpec> fields;
    SequencingMode sequencing_mode = SequencingMode::PerCategory;

    const FieldSpec* find(std::string_view id) const noexcept;
    std::vector<std::string> field_ids() const;
};

namespace field {
inline constexpr std::string_view kDocNo = "doc_no";
inline constexpr std::string_view kTitle = "title";
inline constexpr std::string_view kDate = "date";
inline constexpr std::string_view kDateRemarks = "date_remarks";
inline constexpr std::string_view kSender = "sender";
inline constexpr std::string_view kSenderSec = "sender_sec";
inline constexpr std::string_view kRecipient = "recipient";
inline constexpr std::string_view kRecipientSec = "recipient_sec";
inline constexpr std::string_view kIssuer = "issuer";
inline constexpr std::string_view kIssuerSec = "issuer_sec";
inline constexpr std::string_view kAuthor = "author";
inline constexpr std::string_view kAuthorSec = "author_sec";
inline constexpr std::string_view kPlace = "place";
inline constexpr std::string_view kPlaceSec = "place_sec";
inline constexpr std::string_view kCards = "cards";
inline constexpr std::string_view kRemarks = "remarks";
}  // namespace field

/// Built-in version-1 schema.
SchemaConfig default_schema();

/// Throws Error(ConfigInvalid) on duplicate ids, empty applicability or a
/// missing built-in field.
void validate_schema(const SchemaConfig& schema);

/// Reads a `schema.toml` key tree on top of the default schema:
///
///     version = 2
///     sequencing_mode = "per-category"   # or "per-unit"
///
///     [fields.language]
///     label = "Language"
///     mandatory = false
///     categories = [1, 2, 3, 4, 5, 6, 7, 8, 9]
///     kind = "text"
///
/// Tables naming a built-in id override it in place; new ids append in file order.
SchemaConfig parse_schema(std::istream& in);
SchemaConfig load_schema(const std::filesystem::path& path);

std::vector<std::string> applicable_fields(Category c, const SchemaConfig& schema);
std::vector<std::string> blocked_fields(Category c, const SchemaConfig& schema);

}  // namespace chmeta
