#include "chmeta/check/check.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "chmeta/ingest/csv.hpp"
#include "chmeta/sec/catalog.hpp"
#include "chmeta/util/fs.hpp"
#include "chmeta/util/text.hpp"

namespace chmeta {

namespace {

Diagnostic finding(std::string_view code, Sheet sheet, int row, std::string_view column, std::string message,
                   Severity severity = Severity::Error) {
    return Diagnostic{severity, std::string(code), sheet, row, std::string(column), std::move(message)};
}

struct KindCheck {
    std::string_view code;  // empty when the value parsed
    std::string message;
    std::optional<TypedValue> value;
};

std::string_view date_code(Errc e) {
    switch (e) {
    case Errc::CalendarInvalid: return code::kDateInvalid;
    case Errc::RangeReversed: return code::kDateRangeReversed;
    default: return code::kDateSyntax;
    }
}

KindCheck parse_value(ValueKind kind, std::string_view v) {
    switch (kind) {
    case ValueKind::Text:
        return {{}, {}, TypedValue{std::string(v)}};
    case ValueKind::DocumentNumber: {
        auto r = try_parse_document_number(v);
        if (!r)
            return {code::kDocNoInvalid, r.failure().message, std::nullopt};
        return {{}, {}, TypedValue{*r}};
    }
    case ValueKind::DateExpression: {
        auto r = try_parse_date_expression(v);
        if (!r)
            return {date_code(r.code()), r.failure().message, std::nullopt};
        return {{}, {}, TypedValue{*r}};
    }
    case ValueKind::SecPersonRef:
    case ValueKind::SecPlaceRef: {
        auto r = try_parse_sec_id(v);
        if (!r)
            return {code::kSecRefSyntax, r.failure().message, std::nullopt};
        return {{}, {}, TypedValue{*r}};
    }
    case ValueKind::CardRange: {
        auto r = try_parse_card_ranges(v);
        if (!r)
            return {code::kCardsInvalid, r.failure().message, std::nullopt};
        return {{}, {}, TypedValue{*r}};
    }
    case ValueKind::Url: {
        auto lint = lint_authority_url(v);
        if (has_errors(lint.findings))
            return {code::kUrlInvalid, lint.findings.front().message, std::nullopt};
        return {{}, {}, TypedValue{std::string(v)}};
    }
    case ValueKind::Integer: {
        std::int64_t n = 0;
        const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
        if (ec != std::errc{} || ptr != v.data() + v.size())
            return {code::kIntegerInvalid, "'" + std::string(v) + "' is not an integer", std::nullopt};
        return {{}, {}, TypedValue{n}};
    }
    }
    return {{}, {}, std::nullopt};
}

Diagnostics analyze_row(const DocumentRecord& r, const SchemaConfig& schema, int row,
                        std::map<std::string, TypedValue, std::less<>>* parsed) {
    Diagnostics out;
    const auto doc_no = r.doc_no();
    const bool known = doc_no.has_value();
    const Category category = known ? doc_no->category : Category::Portraits;

    for (const auto& f : schema.fields) {
        const auto raw = r.value(f.id);
        const bool empty = text::trim(raw).empty();
        if (known) {
            if (!f.applicability.contains(category)) {
                if (!empty)
                    out.push_back(finding(code::kBlockedField, Sheet::Documents, row, f.id,
                                          "field '" + f.id + "' is not used for category " +
                                              std::to_string(to_digit(category)) + " (" +
                                              std::string(label(category)) + ")"));
                continue;
            }
        }
        if (empty) {
            // without a category only fields mandatory everywhere can be judged
            if (f.mandatory && (known || f.applicability == CategorySet::all()))
                out.push_back(finding(code::kMandatoryMissing, Sheet::Documents, row, f.id,
                                      "mandatory field '" + f.id + "' is empty"));
            continue;
        }
        auto checked = parse_value(f.kind, raw);
        if (!checked.code.empty()) {
            out.push_back(finding(checked.code, Sheet::Documents, row, f.id, std::move(checked.message)));
        } else if (parsed != nullptr && checked.value) {
            parsed->insert_or_assign(f.id, std::move(*checked.value));
        }
    }
    return out;
}

}  // namespace

Diagnostics check_row(const DocumentRecord& r, const SchemaConfig& schema, int row) {
    return analyze_row(r, schema, row, nullptr);
}

Diagnostics type_row(DocumentRecord& r, const SchemaConfig& schema, int row) {
    r.parsed.clear();
    return analyze_row(r, schema, row, &r.parsed);
}

Diagnostics check_unit(const UnitWorkbook& w, const SchemaConfig& schema) {
    Diagnostics out;
    const auto metric = w.metric_record();
    if (!metric.complete() && !w.documents.empty()) {
        out.push_back(finding(code::kMetricFirst, Sheet::Metric, 1, kWholeRow,
                              "fill in the metric sheet (title and shelfmark) before describing documents"));
        return out;
    }
    out = check_metric(w);
    auto rows = check_documents(w, schema);
    out.insert(out.end(), std::make_move_iterator(rows.begin()), std::make_move_iterator(rows.end()));
    return out;
}

Diagnostics check_metric(const UnitWorkbook& w) {
    Diagnostics out;
    for (std::size_t i = 0; i < w.metric.size(); ++i) {
        const auto& [key, value] = w.metric[i];
        const int row = record_row(i);
        if (key == metric_key::kShelfmark && !text::trim(value).empty()) {
            if (auto s = try_parse_shelfmark(value); !s)
                out.push_back(finding(code::kMetricInvalid, Sheet::Metric, row, key, s.failure().message));
        } else if (key == metric_key::kCardCount && !text::trim(value).empty()) {
            if (!text::parse_unsigned(text::trim(value)))
                out.push_back(finding(code::kMetricInvalid, Sheet::Metric, row, key,
                                      "card_count '" + value + "' is not a non-negative integer"));
        }
    }
    return out;
}

Diagnostics check_documents(const UnitWorkbook& w, const SchemaConfig& schema) {
    Diagnostics out;
    std::unordered_map<std::string_view, int> first_row;
    for (std::size_t i = 0; i < w.documents.size(); ++i) {
        const auto& rec = w.documents[i];
        const int row = record_row(i);
        auto ds = check_row(rec, schema, row);
        out.insert(out.end(), std::make_move_iterator(ds.begin()), std::make_move_iterator(ds.end()));
        if (!rec.doc_no())
            continue;
        const auto number = rec.value(field::kDocNo);
        const auto [it, inserted] = first_row.emplace(number, row);
        if (!inserted)
            out.push_back(finding(code::kDuplicateDocNo, Sheet::Documents, row, field::kDocNo,
                                  "document number " + std::string(number) + " already used in row " +
                                      std::to_string(it->second)));
    }
    return out;
}

Diagnostics sorted_by_severity(Diagnostics ds) {
    std::stable_sort(ds.begin(), ds.end(), [](const Diagnostic& a, const Diagnostic& b) {
        return static_cast<int>(a.severity) < static_cast<int>(b.severity);
    });
    return ds;
}

Annotation annotate(const UnitWorkbook& w, const Diagnostics& ds) {
    (void)w;
    Annotation a;
    const auto sorted = sorted_by_severity(ds);
    a.json = nlohmann::json(sorted).dump(2) + "\n";
    if (sorted.empty()) {
        a.text = "OK (0 findings)\n";
    } else {
        for (const auto& d : sorted)
            a.text += d.to_line() + "\n";
    }
    for (const auto& d : sorted) {
        auto& msg = a.row_messages[{d.sheet, d.row}];
        if (!msg.empty())
            msg += "; ";
        msg += d.code + ": " + d.message;
    }
    a.row_messages_csv = csv::format_row({"sheet", "row", "messages"});
    for (const auto& [key, msg] : a.row_messages)
        a.row_messages_csv += csv::format_row({std::string(to_string(key.first)), std::to_string(key.second), msg});
    return a;
}

void write_annotation(const Annotation& a, const std::filesystem::path& dir) {
    fsutil::write_file(dir / "diagnostics.json", a.json);
    fsutil::write_file(dir / "diagnostics.txt", a.text);
    fsutil::write_file(dir / "annotations.csv", a.row_messages_csv);
}

}  // namespace chmeta
