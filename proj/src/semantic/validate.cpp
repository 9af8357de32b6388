#include "chmeta/semantic/validate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "chmeta/check/check.hpp"
#include "chmeta/error.hpp"
#include "chmeta/scanmap/coverage.hpp"
#include "chmeta/util/fs.hpp"
#include "chmeta/util/text.hpp"

namespace chmeta {

namespace {

Diagnostic make(Severity sev, std::string_view c, Sheet sheet, int row, std::string_view column, std::string msg) {
    return Diagnostic{sev, std::string(c), sheet, row, std::string(column), std::move(msg)};
}

void append(Diagnostics& into, Diagnostics more) {
    into.insert(into.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

constexpr std::size_t kListedGaps = 20;

}  // namespace

std::string_view to_string(Verdict v) noexcept {
    return v == Verdict::Accepted ? "accepted" : "rejected";
}

SeverityCounts ValidationReport::summary() const noexcept {
    return {count(findings, Severity::Error), count(findings, Severity::Warning), count(findings, Severity::Info)};
}

std::string report_timestamp() {
    return fsutil::format_utc(std::chrono::system_clock::now());
}

Diagnostics check_refs(const UnitWorkbook& w, const SecCatalog& sec, const SchemaConfig& schema) {
    Diagnostics out;
    for (std::size_t i = 0; i < w.documents.size(); ++i) {
        const auto& rec = w.documents[i];
        for (const auto& f : schema.fields) {
            if (f.kind != ValueKind::SecPersonRef && f.kind != ValueKind::SecPlaceRef)
                continue;
            const auto raw = rec.value(f.id);
            if (raw.empty())
                continue;
            const auto id = try_parse_sec_id(raw);
            if (!id)
                continue;
            const SecKind wanted = f.kind == ValueKind::SecPersonRef ? SecKind::Person : SecKind::Place;
            if (id->kind != wanted) {
                out.push_back(make(Severity::Error, code::kSecRefKindMismatch, Sheet::Documents, record_row(i), f.id,
                                   id->to_string() + " is a " + std::string(to_string(id->kind)) + " id but '" +
                                       f.id + "' expects a " + std::string(to_string(wanted))));
            } else if (sec.resolve(*id) == nullptr) {
                out.push_back(make(Severity::Error, code::kSecRefUnknown, Sheet::Documents, record_row(i), f.id,
                                   id->to_string() + " is not in the standard entries catalog"));
            }
        }
    }
    return out;
}

Diagnostics check_sequencing(const UnitWorkbook& w, SequencingMode mode) {
    Diagnostics out;
    // group key 0 collects every row in per-unit mode
    std::map<int, std::set<std::uint32_t>> seen;
    for (std::size_t i = 0; i < w.documents.size(); ++i) {
        const auto n = w.documents[i].doc_no();
        if (!n)
            continue;
        const int group = mode == SequencingMode::PerCategory ? to_digit(n->category) : 0;
        if (!seen[group].insert(n->sequence).second)
            out.push_back(make(Severity::Error, code::kSeqDuplicate, Sheet::Documents, record_row(i), field::kDocNo,
                               "sequence number " + std::to_string(n->sequence) + " repeats " +
                                   (group == 0 ? std::string("within the unit")
                                               : "in category " + std::to_string(group))));
    }
    for (const auto& [group, seqs] : seen) {
        std::vector<std::string> listed;
        std::uint64_t missing = 0;
        std::uint64_t expected = 1;
        for (const auto s : seqs) {
            for (std::uint64_t m = expected; m < s && listed.size() < kListedGaps; ++m)
                listed.push_back(std::to_string(m));
            missing += s - expected;
            expected = static_cast<std::uint64_t>(s) + 1;
        }
        if (missing == 0)
            continue;
        std::string msg = group == 0 ? std::string("missing sequence numbers: ")
                                     : "category " + std::to_string(group) + " is missing sequence numbers: ";
        msg += text::join(listed, ", ");
        if (missing > listed.size())
            msg += " and " + std::to_string(missing - listed.size()) + " more";
        out.push_back(make(Severity::Warning, code::kSeqGap, Sheet::Documents, 1, field::kDocNo, std::move(msg)));
    }
    return out;
}

Diagnostics check_lifespan(const SecEntry& person, int row) {
    Diagnostics out;
    std::optional<DateExpression> birth;
    std::optional<DateExpression> death;
    auto parse = [&](std::string_view raw, std::string_view column, std::optional<DateExpression>& into) {
        if (text::trim(raw).empty())
            return;
        auto d = try_parse_date_expression(raw);
        if (!d) {
            out.push_back(make(Severity::Error, code::kLifeDateInvalid, Sheet::Persons, row, column,
                               std::string(column) + " '" + std::string(raw) + "': " + d.failure().message));
            return;
        }
        into = *d;
    };
    parse(person.birth, "birth", birth);
    parse(person.death, "death", death);
    if (!birth || !death)
        return out;
    const auto& b = birth->start;
    const auto& d = death->start;
    if (compare_at_common_precision(d, b) < 0) {
        out.push_back(make(Severity::Error, code::kLifespanNegative, Sheet::Persons, row, "death",
                           "death " + d.to_string() + " precedes birth " + b.to_string()));
    } else if (d.year - b.year > 110) {
        out.push_back(make(Severity::Error, code::kLifespanExceeded, Sheet::Persons, row, "death",
                           "life span " + std::to_string(d.year - b.year) + " years exceeds 110"));
    }
    return out;
}

ValidationReport validate_sec(const SecCatalog& sec, std::string generated_at) {
    ValidationReport r{"SEC", std::move(generated_at), {}};
    for (const SecKind kind : {SecKind::Person, SecKind::Place}) {
        const Sheet sheet = kind == SecKind::Person ? Sheet::Persons : Sheet::Places;
        const auto& entries = sec.entries(kind);
        std::unordered_set<std::uint32_t> ids;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const auto& e = entries[i];
            const int row = record_row(i);
            if (!ids.insert(e.id.number).second)
                r.findings.push_back(make(Severity::Error, code::kSecDuplicateId, sheet, row, "id",
                                          e.id.to_string() + " appears more than once"));
            if (text::trim(e.preferred_name).empty())
                r.findings.push_back(make(Severity::Error, code::kSecEmptyName, sheet, row, "preferred_name",
                                          e.id.to_string() + " has no preferred name"));
            for (const auto& url : e.external_urls)
                append(r.findings, lint_authority_url(url, sheet, row, "external_urls").findings);
            if (kind == SecKind::Person)
                append(r.findings, check_lifespan(e, row));
        }
    }
    return r;
}

UnitWorkbook ensure_map_sheet(UnitWorkbook w, const ValidationReport& report) {
    if (report.subject != w.unit_id)
        throw Error(Errc::PreconditionViolated,
                    "report for '" + report.subject + "' does not cover unit '" + w.unit_id + "'");
    if (report.verdict() != Verdict::Accepted)
        throw Error(Errc::PreconditionViolated,
                    "unit " + w.unit_id + " has " + std::to_string(report.summary().errors) + " errors");
    if (w.map)
        return w;
    std::vector<ScanBinding> seeded;
    for (const auto c : declared_cards(w))
        seeded.push_back(ScanBinding{c, "recto", ""});
    w.map = std::move(seeded);
    return w;
}

UnitValidation validate_unit(const UnitWorkbook& w, const SecCatalog& sec, const SchemaConfig& schema,
                             std::string generated_at) {
    UnitValidation out{ValidationReport{w.unit_id, std::move(generated_at), check_unit(w, schema)}, w, false};
    auto& findings = out.report.findings;

    const auto metric = w.metric_record();
    if (!metric.complete()) {
        if (w.documents.empty()) {
            std::vector<std::string> lacking;
            if (metric.title.empty())
                lacking.emplace_back("title");
            if (!metric.shelfmark)
                lacking.emplace_back("a valid shelfmark");
            findings.push_back(make(Severity::Error, code::kMetricIncomplete, Sheet::Metric, 1, kWholeRow,
                                    "metric sheet lacks " + text::join(lacking, " and ")));
        } else {
            // Program 1 stopped at METRIC_FIRST; the full analysis goes on
            append(findings, check_metric(w));
            append(findings, check_documents(w, schema));
        }
    }
    if (w.documents.empty())
        findings.push_back(make(Severity::Info, code::kNoDocuments, Sheet::Documents, 1, kWholeRow,
                                "the documents sheet has no rows yet"));
    append(findings, check_refs(w, sec, schema));
    append(findings, check_sequencing(w, schema.sequencing_mode));

    if (out.report.verdict() == Verdict::Accepted && !w.map) {
        out.workbook = ensure_map_sheet(std::move(out.workbook), out.report);
        out.map_created = true;
    }
    return out;
}

std::string summary_line(const SeverityCounts& c) {
    auto part = [](std::size_t n, std::string_view word) {
        return std::to_string(n) + " " + std::string(word) + (n == 1 ? "" : "s");
    };
    return part(c.errors, "error") + ", " + part(c.warnings, "warning") + ", " + std::to_string(c.info) + " info";
}

std::string render_report(const ValidationReport& r) {
    std::string out;
    out += "subject: " + r.subject + "\n";
    out += "generated: " + r.generated_at + "\n";
    out += "verdict: " + std::string(to_string(r.verdict())) + "\n";
    out += "summary: " + summary_line(r.summary()) + "\n";

    auto sorted = r.findings;
    std::stable_sort(sorted.begin(), sorted.end(), [](const Diagnostic& a, const Diagnostic& b) {
        return std::pair(static_cast<int>(a.sheet), a.row) < std::pair(static_cast<int>(b.sheet), b.row);
    });
    std::optional<Sheet> sheet;
    std::optional<int> row;
    for (const auto& d : sorted) {
        if (!sheet || *sheet != d.sheet) {
            out += "\n[" + std::string(to_string(d.sheet)) + "]\n";
            sheet = d.sheet;
            row.reset();
        }
        if (!row || *row != d.row) {
            out += "row " + std::to_string(d.row) + "\n";
            row = d.row;
        }
        out += "  " + std::string(to_string(d.severity)) + " " + d.code + " " + d.column + ": " + d.message + "\n";
    }
    return out;
}

std::string render_report_json(const ValidationReport& r) {
    const auto c = r.summary();
    nlohmann::json j{
        {"subject", r.subject},
        {"generated_at", r.generated_at},
        {"verdict", to_string(r.verdict())},
        {"summary", {{"errors", c.errors}, {"warnings", c.warnings}, {"info", c.info}}},
        {"findings", r.findings},
    };
    return j.dump(2) + "\n";
}

ValidationReport parse_report_json(std::string_view json) {
    try {
        const auto j = nlohmann::json::parse(json);
        ValidationReport r;
        r.subject = j.at("subject").get<std::string>();
        r.generated_at = j.at("generated_at").get<std::string>();
        r.findings = j.at("findings").get<Diagnostics>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::MalformedManifest, std::string("report.json: ") + e.what());
    }
}

void write_report(const ValidationReport& r, const std::filesystem::path& dir) {
    fsutil::write_file(dir / "report.txt", render_report(r));
    fsutil::write_file(dir / "report.json", render_report_json(r));
}

}  // namespace chmeta
