#include "chmeta/pipeline/lifecycle.hpp"

#include <algorithm>
#include <string>

#include "chmeta/error.hpp"

namespace chmeta {

namespace {

constexpr std::string_view kStateNames[] = {"created",   "metric-filled", "in-description", "checked",
                                            "validated", "accepted",      "batched",        "scanned",
                                            "mapped",    "exported"};

constexpr std::string_view kEventNames[] = {
    "metric-complete",  "rows-added",       "program1-clean", "program1-failed", "program2-accepted",
    "program2-rejected", "curator-approval", "batch-inclusion", "scans-arrived", "coverage-clean",
    "export-done"};

bool revisable(UnitState s) {
    return s == UnitState::InDescription || s == UnitState::Checked || s == UnitState::Validated ||
           s == UnitState::Accepted;
}

}  // namespace

std::string_view to_string(UnitState s) noexcept {
    return kStateNames[static_cast<std::size_t>(s)];
}

std::string_view to_string(LifecycleEvent e) noexcept {
    return kEventNames[static_cast<std::size_t>(e)];
}

std::optional<UnitState> unit_state_from_string(std::string_view s) noexcept {
    const auto it = std::find(std::begin(kStateNames), std::end(kStateNames), s);
    if (it == std::end(kStateNames))
        return std::nullopt;
    return static_cast<UnitState>(it - std::begin(kStateNames));
}

std::optional<LifecycleEvent> lifecycle_event_from_string(std::string_view s) noexcept {
    const auto it = std::find(std::begin(kEventNames), std::end(kEventNames), s);
    if (it == std::end(kEventNames))
        return std::nullopt;
    return static_cast<LifecycleEvent>(it - std::begin(kEventNames));
}

std::optional<UnitState> transition(UnitState from, LifecycleEvent e) noexcept {
    using S = UnitState;
    using E = LifecycleEvent;
    if (e == E::Program1Failed || e == E::Program2Rejected) {
        if (!revisable(from))
            return std::nullopt;
        return S::InDescription;
    }
    switch (e) {
    case E::MetricComplete: return from == S::Created ? std::optional(S::MetricFilled) : std::nullopt;
    case E::RowsAdded: return from == S::MetricFilled ? std::optional(S::InDescription) : std::nullopt;
    case E::Program1Clean: return from == S::InDescription ? std::optional(S::Checked) : std::nullopt;
    case E::Program2Accepted: return from == S::Checked ? std::optional(S::Validated) : std::nullopt;
    case E::CuratorApproval: return from == S::Validated ? std::optional(S::Accepted) : std::nullopt;
    case E::BatchInclusion: return from == S::Accepted ? std::optional(S::Batched) : std::nullopt;
    case E::ScansArrived: return from == S::Batched ? std::optional(S::Scanned) : std::nullopt;
    case E::CoverageClean: return from == S::Scanned ? std::optional(S::Mapped) : std::nullopt;
    case E::ExportDone: return from == S::Mapped ? std::optional(S::Exported) : std::nullopt;
    default: return std::nullopt;
    }
}

UnitState advance(UnitState from, LifecycleEvent e) {
    const auto to = transition(from, e);
    if (!to)
        throw Error(Errc::IllegalTransition, "no transition from " + std::string(to_string(from)) + " on " +
                                                 std::string(to_string(e)));
    return *to;
}

}  // namespace chmeta
