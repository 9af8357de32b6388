#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "chmeta/pipeline/lifecycle.hpp"

namespace chmeta {

/// One recorded state change.
struct StateChange {
    LifecycleEvent event;
    UnitState from;
    UnitState to;
    std::string at;

    bool operator==(const StateChange&) const = default;
};

/// Contents of a unit's state.json.
struct UnitStatus {
    UnitState state = UnitState::Created;
    /// Content fingerprint of the inputs the last report was made from.
    std::string fingerprint;
    std::vector<StateChange> history;

    bool operator==(const UnitStatus&) const = default;

    /// Applies `e` and records it. Throws Error(IllegalTransition).
    void apply(LifecycleEvent e, std::string at);
};

inline constexpr std::string_view kStateFile = "state.json";

/// A missing state.json reads as a fresh Created unit.
/// Throws Error(MalformedManifest) on unreadable content.
UnitStatus load_status(const std::filesystem::path& unit_dir);
void save_status(const UnitStatus& s, const std::filesystem::path& unit_dir);

/// Loads, applies `e`, saves; returns the new state.
UnitState advance_unit(const std::filesystem::path& unit_dir, LifecycleEvent e, std::string at);

/// Unit directories (those holding a manifest.json) below `root`, sorted.
/// The reserved top-level `sec`, `batches` and `export` trees are skipped.
std::vector<std::filesystem::path> discover_units(const std::filesystem::path& root);

// --- batches -----------------------------------------------------------------

enum class BatchStatus { Open, Processing, Done };

std::string_view to_string(BatchStatus s) noexcept;

struct Batch {
    std::string batch_id;
    std::vector<std::string> unit_ids;
    std::string created_at;
    BatchStatus status = BatchStatus::Open;

    bool operator==(const Batch&) const = default;
};

/// Collects every Accepted unit of the store into a new batch and moves
/// them to Batched. Throws Error(NotEnoughUnits) when fewer than
/// `min_units` are waiting; nothing changes then.
Batch create_batch(const std::filesystem::path& root, std::size_t min_units, std::string at);

/// Batch ids already stored, ascending.
std::vector<std::string> list_batches(const std::filesystem::path& root);
Batch load_batch(const std::filesystem::path& root, std::string_view batch_id);
void save_batch(const Batch& b, const std::filesystem::path& root);

// --- custody -----------------------------------------------------------------

/// Hand-over of the physical originals of one unit.
struct CustodyEvent {
    std::string unit_id;
    std::string from_party;
    std::string to_party;
    std::string timestamp;
    std::string note;

    bool operator==(const CustodyEvent&) const = default;
};

/// Party holding every unit that has no recorded hand-over.
inline constexpr std::string_view kInitialCustodian = "vault";

/// Append-only hand-over log with the current holder per unit.
class CustodyLedger {
public:
    const std::vector<CustodyEvent>& events() const noexcept { return events_; }
    std::string holder(std::string_view unit_id) const;

    /// Throws Error(HolderMismatch) unless `e.from_party` holds the unit, or
    /// Error(ConfigInvalid) for an empty party or a hand-over to oneself.
    void record(CustodyEvent e);

private:
    std::vector<CustodyEvent> events_;
    std::map<std::string, std::string, std::less<>> holders_;
};

inline constexpr std::string_view kCustodyFile = "custody.csv";

/// Replays custody.csv; a missing file is an empty ledger.
CustodyLedger load_custody(const std::filesystem::path& file);

/// Validates `e` against the ledger, then appends one CSV line to `file`.
void record_custody(CustodyLedger& ledger, const CustodyEvent& e, const std::filesystem::path& file);

}  // namespace chmeta
