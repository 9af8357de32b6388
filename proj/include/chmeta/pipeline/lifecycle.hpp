#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace chmeta {

/// Where a unit stands between first description and export.
enum class UnitState {
    Created,
    MetricFilled,
    InDescription,
    Checked,
    Validated,
    Accepted,
    Batched,
    Scanned,
    Mapped,
    Exported,
};

enum class LifecycleEvent {
    MetricComplete,
    RowsAdded,
    Program1Clean,
    Program1Failed,
    Program2Accepted,
    Program2Rejected,
    CuratorApproval,
    BatchInclusion,
    ScansArrived,
    CoverageClean,
    ExportDone,
};

inline constexpr std::array<UnitState, 10> kAllStates = {
    UnitState::Created,   UnitState::MetricFilled, UnitState::InDescription, UnitState::Checked,
    UnitState::Validated, UnitState::Accepted,     UnitState::Batched,       UnitState::Scanned,
    UnitState::Mapped,    UnitState::Exported,
};

inline constexpr std::array<LifecycleEvent, 11> kAllEvents = {
    LifecycleEvent::MetricComplete,   LifecycleEvent::RowsAdded,        LifecycleEvent::Program1Clean,
    LifecycleEvent::Program1Failed,   LifecycleEvent::Program2Accepted, LifecycleEvent::Program2Rejected,
    LifecycleEvent::CuratorApproval,  LifecycleEvent::BatchInclusion,   LifecycleEvent::ScansArrived,
    LifecycleEvent::CoverageClean,    LifecycleEvent::ExportDone,
};

std::string_view to_string(UnitState s) noexcept;
std::string_view to_string(LifecycleEvent e) noexcept;
std::optional<UnitState> unit_state_from_string(std::string_view s) noexcept;
std::optional<LifecycleEvent> lifecycle_event_from_string(std::string_view s) noexcept;

/// The transition table. Forward edges follow the path from description to
/// export; the two failure events send InDescription, Checked, Validated
/// and Accepted back to InDescription. Empty for any other pair.
std::optional<UnitState> transition(UnitState from, LifecycleEvent e) noexcept;

/// Throws Error(IllegalTransition) where the table has no edge.
UnitState advance(UnitState from, LifecycleEvent e);

}  // namespace chmeta
