#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "chmeta/model/schema.hpp"
#include "chmeta/pipeline/lifecycle.hpp"
#include "chmeta/pipeline/store.hpp"
#include "chmeta/sec/catalog.hpp"
#include "chmeta/semantic/validate.hpp"

namespace chmeta {

enum class SyncOutcome { Skipped, Accepted, Rejected, Failed };

std::string_view to_string(SyncOutcome o) noexcept;

struct UnitSync {
    std::filesystem::path dir;
    std::string unit_id;
    SyncOutcome outcome = SyncOutcome::Skipped;
    UnitState state = UnitState::Created;
    std::string error;  // load failure, if any
};

struct SyncSummary {
    std::size_t processed = 0;
    std::size_t skipped = 0;
    std::size_t accepted = 0;
    std::size_t rejected = 0;
    std::size_t failed = 0;
    std::vector<UnitSync> units;

    std::string to_line() const;
};

struct SyncOptions {
    std::function<std::string()> clock = report_timestamp;
    /// Also validate the catalog and write sec/report.{txt,json}.
    bool sec_report = true;
};

/// Fingerprint of a unit's inputs: manifest and sheet bytes, combined with
/// the catalog and schema fingerprints.
std::string unit_fingerprint(const std::filesystem::path& unit_dir, std::string_view context);

/// Fingerprint of what every unit validates against.
std::string context_fingerprint(const SecCatalog& sec, const SchemaConfig& schema);

/// Moves a unit's lifecycle state as far as a validation outcome allows:
/// metric and rows recorded, Program 1 and Program 2 results applied.
/// Units already batched or beyond are left alone.
UnitState drive_state(UnitStatus& status, const UnitWorkbook& w, const ValidationReport& report,
                      const SchemaConfig& schema, const std::string& at);

/// One sweep over the store. Each unit whose inputs changed since its last
/// report is validated, gets report.txt/report.json, a map sheet once
/// accepted, and a state update; the others are skipped. A unit that fails
/// to load is reported with LOAD_FAILED and counted as failed without
/// stopping the sweep. Units are processed one at a time.
SyncSummary sync_once(const std::filesystem::path& root, const SecCatalog& sec, const SchemaConfig& schema,
                      const SyncOptions& options = {});

}  // namespace chmeta
