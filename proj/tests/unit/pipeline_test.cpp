#include <map>
#include <queue>

#include <gtest/gtest.h>

#include "chmeta/error.hpp"
#include "chmeta/pipeline/sync.hpp"
#include "chmeta/util/fs.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace chmeta;
namespace fs = std::filesystem;

namespace {

std::map<std::pair<UnitState, LifecycleEvent>, UnitState> declared_table() {
    std::map<std::pair<UnitState, LifecycleEvent>, UnitState> out;
    for (const auto& e : testsupport::declared_transitions())
        out[{*unit_state_from_string(e.from), *lifecycle_event_from_string(e.event)}] = *unit_state_from_string(e.to);
    return out;
}

// States reachable from Created without passing through `avoid`.
std::set<UnitState> reachable_avoiding(UnitState avoid) {
    std::set<UnitState> seen{UnitState::Created};
    std::queue<UnitState> q;
    q.push(UnitState::Created);
    while (!q.empty()) {
        const auto s = q.front();
        q.pop();
        for (const auto e : kAllEvents)
            if (const auto to = transition(s, e); to && *to != avoid && seen.insert(*to).second)
                q.push(*to);
    }
    return seen;
}

std::string fixed_clock() { return "2026-01-01T00:00:00Z"; }

struct Store {
    testsupport::TempDir dir{"store"};
    std::vector<std::string> ids;

    Store(int units, const SecCatalog& sec, std::uint64_t seed = 1) {
        testsupport::Rng rng(seed);
        for (int i = 0; i < units; ++i) {
            const auto w = testsupport::clean_unit(rng, "Name" + std::to_string(i), 4, sec, false);
            save_unit_workbook(w, dir / w.unit_id);
            ids.push_back(w.unit_id);
        }
    }
    fs::path unit(std::size_t i) const { return dir / ids[i]; }
};

void set_state(const fs::path& unit_dir, UnitState s) {
    UnitStatus st;
    st.state = s;
    save_status(st, unit_dir);
}

}  // namespace

TEST(Lifecycle, ExhaustiveMatrixMatchesDeclaredTable) {
    const auto table = declared_table();
    std::size_t edges = 0;
    for (const auto s : kAllStates)
        for (const auto e : kAllEvents) {
            const auto it = table.find({s, e});
            const auto got = transition(s, e);
            if (it == table.end()) {
                EXPECT_FALSE(got) << to_string(s) << " + " << to_string(e);
                try {
                    advance(s, e);
                    ADD_FAILURE() << to_string(s) << " + " << to_string(e);
                } catch (const Error& err) {
                    EXPECT_EQ(err.code(), Errc::IllegalTransition);
                }
            } else {
                ++edges;
                ASSERT_TRUE(got) << to_string(s) << " + " << to_string(e);
                EXPECT_EQ(*got, it->second);
                EXPECT_EQ(advance(s, e), it->second);
            }
        }
    EXPECT_EQ(edges, table.size());
}

TEST(Lifecycle, Examples) {
    EXPECT_EQ(advance(UnitState::Checked, LifecycleEvent::Program2Rejected), UnitState::InDescription);
    EXPECT_THROW(advance(UnitState::Created, LifecycleEvent::ScansArrived), Error);
}

TEST(Lifecycle, ExportedOnlyThroughAcceptedAndMapped) {
    EXPECT_TRUE(reachable_avoiding(UnitState::Batched).count(UnitState::Accepted));
    EXPECT_FALSE(reachable_avoiding(UnitState::Accepted).count(UnitState::Exported));
    EXPECT_FALSE(reachable_avoiding(UnitState::Mapped).count(UnitState::Exported));
    const auto all = reachable_avoiding(static_cast<UnitState>(255));
    EXPECT_EQ(all.size(), kAllStates.size());
}

TEST(Lifecycle, NamesRoundTrip) {
    for (const auto s : kAllStates)
        EXPECT_EQ(unit_state_from_string(to_string(s)), s);
    for (const auto e : kAllEvents)
        EXPECT_EQ(lifecycle_event_from_string(to_string(e)), e);
    EXPECT_FALSE(unit_state_from_string("done"));
}

TEST(Status, SaveLoadAndHistory) {
    testsupport::TempDir t("status");
    EXPECT_EQ(load_status(t.path()), UnitStatus{});
    UnitStatus s;
    s.apply(LifecycleEvent::MetricComplete, "t1");
    s.apply(LifecycleEvent::RowsAdded, "t2");
    s.fingerprint = "abc";
    save_status(s, t.path());
    EXPECT_EQ(load_status(t.path()), s);
    ASSERT_EQ(s.history.size(), 2u);
    EXPECT_EQ(s.history[1], (StateChange{LifecycleEvent::RowsAdded, UnitState::MetricFilled, UnitState::InDescription, "t2"}));
    EXPECT_THROW(s.apply(LifecycleEvent::ExportDone, "t3"), Error);
    EXPECT_EQ(s.history.size(), 2u);

    EXPECT_EQ(advance_unit(t.path(), LifecycleEvent::Program1Clean, "t4"), UnitState::Checked);
    EXPECT_EQ(load_status(t.path()).state, UnitState::Checked);

    fsutil::write_file(t / kStateFile, "{not json");
    EXPECT_THROW(load_status(t.path()), Error);
}

TEST(Store, DiscoverSkipsReservedTrees) {
    const auto sec = testsupport::synthetic_sec(5, 2);
    Store s(3, sec);
    fs::create_directories(s.dir / "sec" / "x");
    fsutil::write_file(s.dir / "sec" / "x" / "manifest.json", "{}");
    fs::create_directories(s.dir / "batches");
    EXPECT_EQ(discover_units(s.dir.path()).size(), 3u);
}

TEST(Batch, FiveAcceptedMinThree) {
    const auto sec = testsupport::synthetic_sec(5, 2);
    Store s(7, sec);
    std::vector<std::string> expected;
    for (std::size_t i = 0; i < 5; ++i) {
        set_state(s.unit(i), UnitState::Accepted);
        expected.push_back(s.ids[i]);
    }
    set_state(s.unit(5), UnitState::Validated);
    std::sort(expected.begin(), expected.end());
    const auto b = create_batch(s.dir.path(), 3, "t");
    EXPECT_EQ(b.batch_id, "batch-0001");
    auto got = b.unit_ids;
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, expected);
    for (std::size_t i = 0; i < 5; ++i)
        EXPECT_EQ(load_status(s.unit(i)).state, UnitState::Batched);
    EXPECT_EQ(load_status(s.unit(5)).state, UnitState::Validated);
    EXPECT_EQ(list_batches(s.dir.path()), std::vector<std::string>{"batch-0001"});
    EXPECT_EQ(load_batch(s.dir.path(), "batch-0001"), b);

    set_state(s.unit(6), UnitState::Accepted);
    EXPECT_EQ(create_batch(s.dir.path(), 1, "t2").batch_id, "batch-0002");
}

TEST(Batch, TooFewAccepted) {
    const auto sec = testsupport::synthetic_sec(5, 2);
    Store s(4, sec);
    for (const int accepted : {0, 2}) {
        for (int i = 0; i < accepted; ++i)
            set_state(s.unit(static_cast<std::size_t>(i)), UnitState::Accepted);
        try {
            create_batch(s.dir.path(), 3, "t");
            ADD_FAILURE();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::NotEnoughUnits);
        }
        EXPECT_TRUE(list_batches(s.dir.path()).empty());
    }
    EXPECT_EQ(load_status(s.unit(0)).state, UnitState::Accepted);
}

TEST(Custody, HandOvers) {
    testsupport::TempDir t("custody");
    const auto file = t / "custody.csv";
    auto ledger = load_custody(file);
    EXPECT_EQ(ledger.holder("sa-a"), kInitialCustodian);
    record_custody(ledger, {"sa-a", "vault", "scanning, room 2", "t1", "batch-0001"}, file);
    EXPECT_EQ(ledger.holder("sa-a"), "scanning, room 2");
    try {
        record_custody(ledger, {"sa-a", "vault", "reading room", "t2", ""}, file);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::HolderMismatch);
    }
    EXPECT_THROW(record_custody(ledger, {"sa-b", "vault", "vault", "t2", ""}, file), Error);
    EXPECT_THROW(record_custody(ledger, {"sa-b", "vault", " ", "t2", ""}, file), Error);
    record_custody(ledger, {"sa-a", "scanning, room 2", "vault", "t3", "returned \"intact\""}, file);

    const auto replay = load_custody(file);
    EXPECT_EQ(replay.events(), ledger.events());
    EXPECT_EQ(replay.events().size(), 2u);
    EXPECT_EQ(replay.holder("sa-a"), "vault");
}

TEST(Sync, OnlyModifiedUnitsAreProcessed) {
    const auto sec = testsupport::synthetic_sec(20, 5);
    Store s(10, sec);
    const SyncOptions opts{fixed_clock, false};
    const auto first = sync_once(s.dir.path(), sec, default_schema(), opts);
    EXPECT_EQ(first.processed, 10u);
    EXPECT_EQ(first.accepted, 10u);
    for (std::size_t i = 0; i < 10; ++i) {
        EXPECT_TRUE(fs::exists(s.unit(i) / "report.txt"));
        EXPECT_TRUE(fs::exists(s.unit(i) / "map.csv"));
        EXPECT_EQ(load_status(s.unit(i)).state, UnitState::Validated);
    }

    for (const std::size_t i : {1u, 4u, 8u}) {
        auto w = load_unit_workbook(s.unit(i), default_schema());
        w.documents[0].values["title"] += " (revised)";
        save_unit_workbook(w, s.unit(i));
    }
    const auto second = sync_once(s.dir.path(), sec, default_schema(), opts);
    EXPECT_EQ(second.processed, 3u);
    EXPECT_EQ(second.skipped, 7u);
    EXPECT_EQ(second.to_line(), "processed=3 skipped=7 accepted=3 rejected=0 failed=0");

    const auto third = sync_once(s.dir.path(), sec, default_schema(), opts);
    EXPECT_EQ(third.processed, 0u);
    EXPECT_EQ(third.skipped, 10u);
}

TEST(Sync, CatalogChangeReprocessesEverything) {
    const auto sec = testsupport::synthetic_sec(20, 5);
    Store s(4, sec);
    const SyncOptions opts{fixed_clock, false};
    sync_once(s.dir.path(), sec, default_schema(), opts);
    const auto bigger = testsupport::synthetic_sec(21, 5);
    EXPECT_NE(context_fingerprint(sec, default_schema()), context_fingerprint(bigger, default_schema()));
    EXPECT_EQ(sync_once(s.dir.path(), bigger, default_schema(), opts).processed, 4u);
}

TEST(Sync, BrokenUnitDoesNotStopSweep) {
    const auto sec = testsupport::synthetic_sec(20, 5);
    Store s(5, sec);
    fsutil::write_file(s.unit(2) / "documents.csv", "doc_no,\"unterminated\n");
    const SyncOptions opts{fixed_clock, false};
    const auto r = sync_once(s.dir.path(), sec, default_schema(), opts);
    EXPECT_EQ(r.failed, 1u);
    EXPECT_EQ(r.accepted, 4u);
    EXPECT_NE(fsutil::read_file(s.unit(2) / "report.txt").find("LOAD_FAILED"), std::string::npos);
    EXPECT_EQ(sync_once(s.dir.path(), sec, default_schema(), opts).processed, 0u);
}

TEST(Sync, RejectedUnitReturnsToDescription) {
    const auto sec = testsupport::synthetic_sec(20, 5);
    Store s(1, sec);
    const SyncOptions opts{fixed_clock, false};
    sync_once(s.dir.path(), sec, default_schema(), opts);
    set_state(s.unit(0), UnitState::Accepted);
    auto w = load_unit_workbook(s.unit(0), default_schema());
    w.documents[0].values["date"] = "1820-02-30";
    save_unit_workbook(w, s.unit(0));
    const auto r = sync_once(s.dir.path(), sec, default_schema(), opts);
    EXPECT_EQ(r.rejected, 1u);
    EXPECT_EQ(load_status(s.unit(0)).state, UnitState::InDescription);
}

TEST(Sync, WritesSecReportWhenAsked) {
    const auto sec = testsupport::synthetic_sec(3, 1);
    Store s(1, sec);
    fs::create_directories(s.dir / "sec");
    sync_once(s.dir.path(), sec, default_schema(), SyncOptions{fixed_clock, true});
    EXPECT_NE(fsutil::read_file(s.dir / "sec" / "report.txt").find("subject: SEC"), std::string::npos);
}
