// chmeta: command-line front end for the metadata workflow.

#include <iostream>
#include <set>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "chmeta/check/check.hpp"
#include "chmeta/error.hpp"
#include "chmeta/export/export.hpp"
#include "chmeta/ingest/workbook.hpp"
#include "chmeta/ingest/xlsx.hpp"
#include "chmeta/pipeline/store.hpp"
#include "chmeta/pipeline/sync.hpp"
#include "chmeta/scanmap/coverage.hpp"
#include "chmeta/semantic/validate.hpp"
#include "chmeta/util/fs.hpp"
#include "chmeta/util/text.hpp"

namespace fs = std::filesystem;
using namespace chmeta;

namespace {

enum Exit { kClean = 0, kFindings = 2, kIoFailure = 3, kConfig = 4 };

int exit_code(Errc e) {
    switch (e) {
    case Errc::IllegalTransition:
    case Errc::NotEnoughUnits:
    case Errc::HolderMismatch:
    case Errc::UnitNotAccepted:
    case Errc::ProposalNotPending:
    case Errc::TargetMissing:
    case Errc::InvalidProposal:
    case Errc::MapSheetAbsent:
    case Errc::PreconditionViolated:
    case Errc::MetricIncomplete:
    case Errc::EmptyInput:
    case Errc::IdSpaceExhausted:
        return kFindings;
    case Errc::ConfigInvalid:
    case Errc::InvalidIriPolicy:
    case Errc::NotTwoParts:
    case Errc::CategoryOutOfRange:
    case Errc::SequenceNotPositiveInteger:
    case Errc::NonCanonicalForm:
    case Errc::GrammarMismatch:
    case Errc::CalendarInvalid:
    case Errc::RangeReversed:
    case Errc::MissingPrefix:
    case Errc::EmptyName:
    case Errc::InvalidSecId:
        return kConfig;
    default:
        return kIoFailure;
    }
}

struct Store {
    fs::path root = ".";
    std::string schema_file;
    std::string sec_dir;

    fs::path sec_path() const { return sec_dir.empty() ? root / "sec" : fs::path(sec_dir); }

    SchemaConfig schema() const {
        if (!schema_file.empty())
            return load_schema(schema_file);
        if (fs::exists(root / "schema.toml"))
            return load_schema(root / "schema.toml");
        return default_schema();
    }

    SecCatalog sec() const {
        const auto dir = sec_path();
        if (!fs::exists(dir / sec_file::kPersons) && !fs::exists(dir / sec_file::kPlaces)) {
            std::cerr << "note: no catalog at " << dir.string() << ", using an empty one\n";
            return {};
        }
        return load_sec_catalog(dir);
    }

    // A unit argument is a directory, a directory below the root, or a unit id.
    fs::path unit(const std::string& arg) const {
        if (fs::exists(fs::path(arg) / sheet_file::kManifest))
            return arg;
        if (fs::exists(root / arg / sheet_file::kManifest))
            return root / arg;
        for (const auto& dir : discover_units(root))
            if (dir.filename() == arg)
                return dir;
        throw Error(Errc::MissingManifest, "no unit '" + arg + "' under " + root.string());
    }
};

void add_store_options(CLI::App* cmd, Store& store) {
    cmd->add_option("--root", store.root, "store root directory")->capture_default_str();
    cmd->add_option("--schema", store.schema_file, "schema.toml (default: <root>/schema.toml if present)");
    cmd->add_option("--sec", store.sec_dir, "catalog directory (default: <root>/sec)");
}

std::string now() {
    return report_timestamp();
}

void print_findings(const Diagnostics& ds) {
    for (const auto& d : sorted_by_severity(ds))
        std::cout << d.to_line() << "\n";
}

// Validates one unit directory, writes report and map, moves its state.
bool validate_dir(const fs::path& dir, const SecCatalog& sec, const SchemaConfig& schema) {
    const auto w = load_unit_workbook(dir, schema);
    const auto at = now();
    const auto v = validate_unit(w, sec, schema, at);
    if (v.map_created) {
        fsutil::write_file(dir / sheet_file::kMap, render_map_csv(*v.workbook.map));
        fsutil::write_file(dir / sheet_file::kManifest, render_manifest(v.workbook));
    }
    write_report(v.report, dir);
    auto status = load_status(dir);
    drive_state(status, w, v.report, schema, at);
    status.fingerprint = unit_fingerprint(dir, context_fingerprint(sec, schema));
    save_status(status, dir);
    std::cout << fmt::format("{}: {} ({}), state {}\n", w.unit_id, to_string(v.report.verdict()),
                             summary_line(v.report.summary()), to_string(status.state));
    return v.report.verdict() == Verdict::Accepted;
}

std::set<std::string> split_ids(const std::vector<std::string>& args) {
    std::set<std::string> out;
    for (const auto& a : args)
        for (const auto& part : text::split(a, ','))
            if (!text::trim(part).empty())
                out.emplace(text::trim(part));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chmeta: manuscript metadata checking, validation and export"};
    app.require_subcommand(1);
    Store store;

    // new-unit
    auto* new_unit = app.add_subcommand("new-unit", "create an empty unit workbook");
    std::string shelfmark;
    new_unit->add_option("shelfmark", shelfmark, "shelfmark, e.g. \"SA, Keppler, Johannes\"")->required();
    add_store_options(new_unit, store);

    // import
    auto* import = app.add_subcommand("import", "convert an .xlsx workbook into a unit directory");
    std::string xlsx_file;
    import->add_option("file", xlsx_file, ".xlsx file")->required()->check(CLI::ExistingFile);
    add_store_options(import, store);

    // check
    auto* check = app.add_subcommand("check", "Program 1: in-sheet checks, writes annotation sidecars");
    std::string check_target;
    check->add_option("unit", check_target, "unit directory, unit id or .xlsx file")->required();
    add_store_options(check, store);

    // validate
    auto* validate = app.add_subcommand("validate", "Program 2: full validation with report");
    std::string validate_target;
    bool validate_all = false;
    validate->add_option("unit", validate_target, "unit directory or id");
    validate->add_flag("--all", validate_all, "every unit of the store");
    add_store_options(validate, store);

    // sec
    auto* sec = app.add_subcommand("sec", "standard entries catalog");
    sec->require_subcommand(1);
    auto* sec_lint = sec->add_subcommand("lint", "validate the catalog, write sec/report.*");
    add_store_options(sec_lint, store);
    auto* sec_apply = sec->add_subcommand("apply-proposals", "decide pending proposals");
    std::vector<std::string> accept_ids;
    std::vector<std::string> reject_ids;
    bool accept_all = false;
    sec_apply->add_option("--accept", accept_ids, "proposal ids to accept (comma separated)");
    sec_apply->add_option("--reject", reject_ids, "proposal ids to reject (comma separated)");
    sec_apply->add_flag("--accept-all", accept_all, "accept every pending proposal not rejected");
    add_store_options(sec_apply, store);

    // map
    auto* map = app.add_subcommand("map", "scan map");
    map->require_subcommand(1);
    auto* map_check = map->add_subcommand("check", "compare the map sheet with the scan folder");
    std::string map_target;
    std::string scan_root;
    map_check->add_option("unit", map_target, "unit directory or id")->required();
    map_check->add_option("--scan-root", scan_root, "root of the scan folder tree")->required();
    add_store_options(map_check, store);

    // batch
    auto* batch = app.add_subcommand("batch", "batches of accepted units");
    batch->require_subcommand(1);
    auto* batch_create = batch->add_subcommand("create", "collect accepted units into a batch");
    std::size_t min_units = 1;
    batch_create->add_option("--min", min_units, "minimum number of units")->capture_default_str();
    add_store_options(batch_create, store);

    // export
    auto* exp = app.add_subcommand("export", "write EDM, CIDOC-CRM, EAD or Dublin Core");
    std::string export_target;
    std::string format;
    std::string base;
    std::string mapping_file;
    exp->add_option("target", export_target, "unit directory, unit id or batch id")->required();
    exp->add_option("--format", format, "edm|cidoc|ead|dc")
        ->required()
        ->check(CLI::IsMember({"edm", "cidoc", "ead", "dc"}));
    exp->add_option("--base", base, "base IRI for minted IRIs");
    exp->add_option("--mapping", mapping_file, "category to event class mapping (INI)");
    add_store_options(exp, store);

    // sync-once
    auto* sync = app.add_subcommand("sync-once", "validate every changed unit once");
    add_store_options(sync, store);

    // custody
    auto* custody = app.add_subcommand("custody", "hand-over ledger of the originals");
    custody->require_subcommand(1);
    auto* custody_log = custody->add_subcommand("log", "record a hand-over");
    std::string custody_unit;
    CustodyEvent handover;
    custody_log->add_option("unit", custody_unit, "unit id")->required();
    custody_log->add_option("--from", handover.from_party, "party handing over")->required();
    custody_log->add_option("--to", handover.to_party, "party receiving")->required();
    custody_log->add_option("--note", handover.note, "free note");
    add_store_options(custody_log, store);
    auto* custody_holder = custody->add_subcommand("holder", "show who holds a unit");
    custody_holder->add_option("unit", custody_unit, "unit id")->required();
    add_store_options(custody_holder, store);

    // state
    auto* state = app.add_subcommand("state", "show or advance a unit's lifecycle state");
    std::string state_target;
    std::string event_name;
    state->add_option("unit", state_target, "unit directory or id")->required();
    state->add_option("--event", event_name, "event to apply, e.g. curator-approval");
    add_store_options(state, store);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kClean : kConfig;
    }

    try {
        if (*new_unit) {
            const auto schema = store.schema();
            const auto w = new_unit_workbook(parse_shelfmark(shelfmark), schema);
            const auto dir = store.root / w.unit_id;
            if (fs::exists(dir))
                throw Error(Errc::ConfigInvalid, dir.string() + " already exists");
            fs::create_directories(dir);
            save_unit_workbook(w, dir);
            save_status(UnitStatus{}, dir);
            std::cout << dir.string() << "\n";
            return kClean;
        }

        if (*import) {
            const auto schema = store.schema();
            const auto w = import_xlsx(xlsx_file, schema);
            const auto dir = store.root / w.unit_id;
            fs::create_directories(dir);
            save_unit_workbook(w, dir);
            std::cout << dir.string() << "\n";
            return kClean;
        }

        if (*check) {
            const auto schema = store.schema();
            UnitWorkbook w;
            fs::path sidecar;
            if (fs::path(check_target).extension() == ".xlsx") {
                w = import_xlsx(check_target, schema);
                sidecar = fs::path(check_target).string() + ".check";
                fs::create_directories(sidecar);
            } else {
                sidecar = store.unit(check_target);
                w = load_unit_workbook(sidecar, schema);
            }
            const auto ds = check_unit(w, schema);
            const auto a = annotate(w, ds);
            write_annotation(a, sidecar);
            std::cout << a.text;
            return has_errors(ds) ? kFindings : kClean;
        }

        if (*validate) {
            if (validate_all == !validate_target.empty())
                throw Error(Errc::ConfigInvalid, "give either a unit or --all");
            const auto schema = store.schema();
            const auto catalog = store.sec();
            bool all_accepted = true;
            if (validate_all) {
                for (const auto& dir : discover_units(store.root)) {
                    try {
                        all_accepted = validate_dir(dir, catalog, schema) && all_accepted;
                    } catch (const Error& e) {
                        std::cout << dir.string() << ": " << e.what() << "\n";
                        all_accepted = false;
                    }
                }
            } else {
                all_accepted = validate_dir(store.unit(validate_target), catalog, schema);
            }
            return all_accepted ? kClean : kFindings;
        }

        if (*sec_lint) {
            const auto catalog = store.sec();
            const auto r = validate_sec(catalog);
            write_report(r, store.sec_path());
            std::cout << render_report(r);
            return r.verdict() == Verdict::Accepted ? kClean : kFindings;
        }

        if (*sec_apply) {
            auto catalog = load_sec_catalog(store.sec_path());
            const auto accept = split_ids(accept_ids);
            const auto reject = split_ids(reject_ids);
            int rc = kClean;
            for (const auto kind : {SecKind::Person, SecKind::Place}) {
                const auto file = store.sec_path() /
                                  (kind == SecKind::Person ? sec_file::kPersonProposals : sec_file::kPlaceProposals);
                auto proposals = load_proposals(file, kind);
                bool touched = false;
                for (auto& p : proposals) {
                    const bool named = accept.count(p.proposal_id) || reject.count(p.proposal_id);
                    if (!named && (!accept_all || p.status != ProposalStatus::Pending))
                        continue;
                    const auto decision = reject.count(p.proposal_id) ? Decision::Reject : Decision::Accept;
                    try {
                        const auto id = apply_proposal(catalog, p, decision);
                        touched = true;
                        std::cout << fmt::format("{} {} {}{}\n", to_string(kind), p.proposal_id, to_string(p.status),
                                                 id ? " -> " + id->to_string() : "");
                    } catch (const Error& e) {
                        std::cout << fmt::format("{} {} refused: {}\n", to_string(kind), p.proposal_id, e.what());
                        rc = kFindings;
                    }
                }
                if (touched)
                    save_proposals(proposals, kind, file);
            }
            save_sec_catalog(catalog, store.sec_path());
            return rc;
        }

        if (*map_check) {
            const auto schema = store.schema();
            const auto dir = store.unit(map_target);
            const auto w = load_unit_workbook(dir, schema);
            const auto files = list_scan_files(resolve_scan_folder(w.unit_id, scan_root));
            const auto ds = check_coverage(w, files);
            print_findings(ds);
            auto status = load_status(dir);
            if (status.state == UnitState::Batched && !files.empty())
                status.apply(LifecycleEvent::ScansArrived, now());
            if (status.state == UnitState::Scanned && !has_errors(ds))
                status.apply(LifecycleEvent::CoverageClean, now());
            save_status(status, dir);
            std::cout << fmt::format("{}: {} files, {}, state {}\n", w.unit_id, files.size(),
                                     summary_line({count(ds, Severity::Error), count(ds, Severity::Warning),
                                                   count(ds, Severity::Info)}),
                                     to_string(status.state));
            return has_errors(ds) ? kFindings : kClean;
        }

        if (*batch_create) {
            const auto b = create_batch(store.root, min_units, now());
            std::cout << fmt::format("{}: {} units\n", b.batch_id, b.unit_ids.size());
            for (const auto& id : b.unit_ids)
                std::cout << "  " << id << "\n";
            return kClean;
        }

        if (*exp) {
            const auto schema = store.schema();
            const auto catalog = store.sec();
            ExportOptions options;
            options.schema = schema;
            if (!mapping_file.empty())
                options.mapping = load_cidoc_mapping(mapping_file);
            IriPolicy policy;
            if (!base.empty())
                policy.base = base;
            validate_policy(policy);

            std::vector<fs::path> dirs;
            fs::path batch_out;
            const auto batches = list_batches(store.root);
            if (std::find(batches.begin(), batches.end(), export_target) != batches.end()) {
                for (const auto& id : load_batch(store.root, export_target).unit_ids)
                    dirs.push_back(store.unit(id));
                batch_out = store.root / "batches" / export_target;
            } else {
                dirs.push_back(store.unit(export_target));
            }

            std::vector<UnitWorkbook> units;
            for (const auto& dir : dirs)
                units.push_back(load_unit_workbook(dir, schema));

            if (format == "ead") {
                const auto xml = export_ead(units, catalog, CollectionMeta{}, options);
                const auto out_dir = batch_out.empty() ? dirs.front() / "export" : batch_out;
                fs::create_directories(out_dir);
                fsutil::write_file(out_dir / "ead.xml", xml);
                std::cout << (out_dir / "ead.xml").string() << "\n";
            } else {
                for (std::size_t i = 0; i < units.size(); ++i) {
                    const auto out_dir = dirs[i] / "export";
                    fs::create_directories(out_dir);
                    fs::path file;
                    if (format == "dc") {
                        file = out_dir / "dc.csv";
                        fsutil::write_file(file, render_dc_csv(export_dc(units[i])));
                    } else {
                        const auto g = format == "edm" ? export_edm(units[i], catalog, policy, options)
                                                       : export_cidoc(units[i], catalog, policy, options);
                        for (const auto& w : g.warnings)
                            std::cerr << w.to_line() << "\n";
                        file = out_dir / (format + ".ttl");
                        fsutil::write_file(file, rdf::serialize_turtle(g.triples));
                    }
                    std::cout << file.string() << "\n";
                }
            }
            for (const auto& dir : dirs) {
                auto status = load_status(dir);
                if (status.state == UnitState::Mapped) {
                    status.apply(LifecycleEvent::ExportDone, now());
                    save_status(status, dir);
                }
            }
            return kClean;
        }

        if (*sync) {
            const auto summary = sync_once(store.root, store.sec(), store.schema());
            for (const auto& u : summary.units)
                if (u.outcome != SyncOutcome::Skipped)
                    std::cout << fmt::format("{}: {}, state {}{}\n", u.unit_id, to_string(u.outcome),
                                             to_string(u.state), u.error.empty() ? "" : " (" + u.error + ")");
            std::cout << summary.to_line() << "\n";
            if (summary.failed > 0)
                return kIoFailure;
            return summary.rejected > 0 ? kFindings : kClean;
        }

        if (*custody_log) {
            const auto file = store.root / kCustodyFile;
            auto ledger = load_custody(file);
            handover.unit_id = custody_unit;
            handover.timestamp = now();
            record_custody(ledger, handover, file);
            std::cout << fmt::format("{} now held by {}\n", custody_unit, ledger.holder(custody_unit));
            return kClean;
        }

        if (*custody_holder) {
            std::cout << load_custody(store.root / kCustodyFile).holder(custody_unit) << "\n";
            return kClean;
        }

        if (*state) {
            const auto dir = store.unit(state_target);
            if (event_name.empty()) {
                std::cout << to_string(load_status(dir).state) << "\n";
                return kClean;
            }
            const auto event = lifecycle_event_from_string(event_name);
            if (!event)
                throw Error(Errc::ConfigInvalid, "unknown event '" + event_name + "'");
            std::cout << to_string(advance_unit(dir, *event, now())) << "\n";
            return kClean;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoFailure;
    }
    return kClean;
}
