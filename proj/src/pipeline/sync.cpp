#include "chmeta/pipeline/sync.hpp"

#include <fmt/format.h>

#include "chmeta/check/check.hpp"
#include "chmeta/error.hpp"
#include "chmeta/util/fs.hpp"

namespace chmeta {

namespace fs = std::filesystem;

std::string_view to_string(SyncOutcome o) noexcept {
    switch (o) {
    case SyncOutcome::Skipped: return "skipped";
    case SyncOutcome::Accepted: return "accepted";
    case SyncOutcome::Rejected: return "rejected";
    case SyncOutcome::Failed: return "failed";
    }
    return "";
}

std::string SyncSummary::to_line() const {
    return fmt::format("processed={} skipped={} accepted={} rejected={} failed={}", processed, skipped, accepted,
                       rejected, failed);
}

std::string unit_fingerprint(const fs::path& unit_dir, std::string_view context) {
    std::uint64_t h = fsutil::fnv1a(context);
    for (const auto name : {sheet_file::kManifest, sheet_file::kMetric, sheet_file::kDocuments, sheet_file::kMap}) {
        const auto file = unit_dir / name;
        std::error_code ec;
        if (!fs::exists(file, ec))
            continue;
        h = fsutil::fnv1a(name, h);
        try {
            h = fsutil::fnv1a(fsutil::read_file(file), h);
        } catch (const Error& e) {
            h = fsutil::fnv1a(e.message(), h);
        }
    }
    return fsutil::hex64(h);
}

std::string context_fingerprint(const SecCatalog& sec, const SchemaConfig& schema) {
    std::uint64_t h = fsutil::fnv1a(render_entries_csv(sec.persons(), SecKind::Person));
    h = fsutil::fnv1a(render_entries_csv(sec.places(), SecKind::Place), h);
    std::string s = fmt::format("v{} {}\n", schema.version, to_string(schema.sequencing_mode));
    for (const auto& f : schema.fields) {
        s += fmt::format("{}|{}|{}|", f.id, to_string(f.kind), f.mandatory ? 1 : 0);
        for (const auto c : f.applicability.members())
            s += std::to_string(to_digit(c));
        s += '\n';
    }
    return fsutil::hex64(fsutil::fnv1a(s, h));
}

UnitState drive_state(UnitStatus& status, const UnitWorkbook& w, const ValidationReport& report,
                      const SchemaConfig& schema, const std::string& at) {
    const bool accepted = report.verdict() == Verdict::Accepted;
    for (;;) {
        switch (status.state) {
        case UnitState::Created:
            if (!w.metric_record().complete())
                return status.state;
            status.apply(LifecycleEvent::MetricComplete, at);
            break;
        case UnitState::MetricFilled:
            if (w.documents.empty())
                return status.state;
            status.apply(LifecycleEvent::RowsAdded, at);
            break;
        case UnitState::InDescription:
            if (has_errors(check_unit(w, schema))) {
                status.apply(LifecycleEvent::Program1Failed, at);
                return status.state;
            }
            status.apply(LifecycleEvent::Program1Clean, at);
            break;
        case UnitState::Checked:
            status.apply(accepted ? LifecycleEvent::Program2Accepted : LifecycleEvent::Program2Rejected, at);
            return status.state;
        case UnitState::Validated:
        case UnitState::Accepted:
            if (!accepted)
                status.apply(LifecycleEvent::Program2Rejected, at);
            return status.state;
        default:
            return status.state;
        }
    }
}

namespace {

void save_created_map(const UnitWorkbook& w, const fs::path& dir) {
    fsutil::write_file(dir / sheet_file::kMap, render_map_csv(*w.map));
    fsutil::write_file(dir / sheet_file::kManifest, render_manifest(w));
}

UnitSync sync_unit(const fs::path& dir, const SecCatalog& sec, const SchemaConfig& schema,
                   const std::string& context, const SyncOptions& options) {
    UnitSync u{dir, dir.filename().string(), SyncOutcome::Skipped, UnitState::Created, {}};
    auto status = load_status(dir);
    u.state = status.state;
    if (status.fingerprint == unit_fingerprint(dir, context))
        return u;

    const auto now = options.clock();
    try {
        const auto w = load_unit_workbook(dir, schema);
        u.unit_id = w.unit_id;
        const auto v = validate_unit(w, sec, schema, now);
        if (v.map_created)
            save_created_map(v.workbook, dir);
        write_report(v.report, dir);
        drive_state(status, w, v.report, schema, now);
        u.outcome = v.report.verdict() == Verdict::Accepted ? SyncOutcome::Accepted : SyncOutcome::Rejected;
    } catch (const Error& e) {
        ValidationReport r{u.unit_id, now, {}};
        r.findings.push_back(Diagnostic{Severity::Error, std::string(code::kLoadFailed), Sheet::Documents, 1,
                                        std::string(kWholeRow), e.message()});
        write_report(r, dir);
        u.outcome = SyncOutcome::Failed;
        u.error = e.what();
    }
    status.fingerprint = unit_fingerprint(dir, context);
    save_status(status, dir);
    u.state = status.state;
    return u;
}

}  // namespace

SyncSummary sync_once(const fs::path& root, const SecCatalog& sec, const SchemaConfig& schema,
                      const SyncOptions& options) {
    SyncSummary summary;
    const auto context = context_fingerprint(sec, schema);
    for (const auto& dir : discover_units(root)) {
        UnitSync u;
        try {
            u = sync_unit(dir, sec, schema, context, options);
        } catch (const std::exception& e) {
            // state or report could not be written; retried next sweep
            u = UnitSync{dir, dir.filename().string(), SyncOutcome::Failed, UnitState::Created, e.what()};
        }
        switch (u.outcome) {
        case SyncOutcome::Skipped: ++summary.skipped; break;
        case SyncOutcome::Accepted: ++summary.accepted; break;
        case SyncOutcome::Rejected: ++summary.rejected; break;
        case SyncOutcome::Failed: ++summary.failed; break;
        }
        if (u.outcome != SyncOutcome::Skipped)
            ++summary.processed;
        summary.units.push_back(std::move(u));
    }
    if (options.sec_report && fs::is_directory(root / "sec"))
        write_report(validate_sec(sec, options.clock()), root / "sec");
    return summary;
}

}  // namespace chmeta
