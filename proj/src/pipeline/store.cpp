#include "chmeta/pipeline/store.hpp"

#include <algorithm>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "chmeta/error.hpp"
#include "chmeta/ingest/csv.hpp"
#include "chmeta/ingest/workbook.hpp"
#include "chmeta/util/fs.hpp"
#include "chmeta/util/text.hpp"

namespace chmeta {

namespace fs = std::filesystem;
using nlohmann::json;

void UnitStatus::apply(LifecycleEvent e, std::string at) {
    const auto to = advance(state, e);
    history.push_back(StateChange{e, state, to, std::move(at)});
    state = to;
}

UnitStatus load_status(const fs::path& unit_dir) {
    UnitStatus s;
    const auto file = unit_dir / kStateFile;
    if (!fs::exists(file))
        return s;
    try {
        const auto j = json::parse(fsutil::read_file(file));
        const auto state = unit_state_from_string(j.at("state").get<std::string>());
        if (!state)
            throw Error(Errc::MalformedManifest, file.string() + ": unknown state");
        s.state = *state;
        s.fingerprint = j.value("fingerprint", "");
        for (const auto& h : j.value("history", json::array())) {
            const auto ev = lifecycle_event_from_string(h.at("event").get<std::string>());
            const auto from = unit_state_from_string(h.at("from").get<std::string>());
            const auto to = unit_state_from_string(h.at("to").get<std::string>());
            if (!ev || !from || !to)
                throw Error(Errc::MalformedManifest, file.string() + ": bad history entry");
            s.history.push_back(StateChange{*ev, *from, *to, h.value("at", "")});
        }
    } catch (const json::exception& e) {
        throw Error(Errc::MalformedManifest, file.string() + ": " + e.what());
    }
    return s;
}

void save_status(const UnitStatus& s, const fs::path& unit_dir) {
    json history = json::array();
    for (const auto& h : s.history)
        history.push_back({{"event", to_string(h.event)}, {"from", to_string(h.from)}, {"to", to_string(h.to)},
                           {"at", h.at}});
    const json j{{"state", to_string(s.state)}, {"fingerprint", s.fingerprint}, {"history", history}};
    fsutil::write_file(unit_dir / kStateFile, j.dump(2) + "\n");
}

UnitState advance_unit(const fs::path& unit_dir, LifecycleEvent e, std::string at) {
    auto s = load_status(unit_dir);
    s.apply(e, std::move(at));
    save_status(s, unit_dir);
    return s.state;
}

std::vector<fs::path> discover_units(const fs::path& root) {
    std::vector<fs::path> out;
    std::error_code ec;
    if (!fs::is_directory(root, ec))
        throw Error(Errc::IoError, root.string() + " is not a directory");
    for (auto it = fs::recursive_directory_iterator(root, ec); !ec && it != fs::recursive_directory_iterator();
         it.increment(ec)) {
        if (!it->is_directory(ec))
            continue;
        const auto name = it->path().filename().string();
        if (it.depth() == 0 && (name == "sec" || name == "batches" || name == "export")) {
            it.disable_recursion_pending();
            continue;
        }
        if (name == "export") {
            it.disable_recursion_pending();
            continue;
        }
        if (fs::exists(it->path() / sheet_file::kManifest)) {
            out.push_back(it->path());
            it.disable_recursion_pending();
        }
    }
    if (ec)
        throw Error(Errc::IoError, "cannot walk " + root.string() + ": " + ec.message());
    if (fs::exists(root / sheet_file::kManifest))
        out.push_back(root);
    std::sort(out.begin(), out.end());
    return out;
}

// --- batches -----------------------------------------------------------------

std::string_view to_string(BatchStatus s) noexcept {
    switch (s) {
    case BatchStatus::Open: return "open";
    case BatchStatus::Processing: return "processing";
    case BatchStatus::Done: return "done";
    }
    return "open";
}

namespace {

fs::path batch_dir(const fs::path& root) {
    return root / "batches";
}

std::string unit_id_of(const fs::path& unit_dir) {
    try {
        const auto j = json::parse(fsutil::read_file(unit_dir / sheet_file::kManifest));
        return j.at("unit_id").get<std::string>();
    } catch (const json::exception&) {
        return unit_dir.filename().string();
    }
}

}  // namespace

std::vector<std::string> list_batches(const fs::path& root) {
    std::vector<std::string> out;
    std::error_code ec;
    for (const auto& e : fs::directory_iterator(batch_dir(root), ec))
        if (e.path().extension() == ".json")
            out.push_back(e.path().stem().string());
    std::sort(out.begin(), out.end());
    return out;
}

Batch load_batch(const fs::path& root, std::string_view batch_id) {
    const auto file = batch_dir(root) / (std::string(batch_id) + ".json");
    if (!fs::exists(file))
        throw Error(Errc::MissingManifest, file.string() + " not found");
    try {
        const auto j = json::parse(fsutil::read_file(file));
        Batch b;
        b.batch_id = j.at("batch_id").get<std::string>();
        b.unit_ids = j.at("unit_ids").get<std::vector<std::string>>();
        b.created_at = j.at("created_at").get<std::string>();
        const auto status = j.at("status").get<std::string>();
        if (status == "open")
            b.status = BatchStatus::Open;
        else if (status == "processing")
            b.status = BatchStatus::Processing;
        else if (status == "done")
            b.status = BatchStatus::Done;
        else
            throw Error(Errc::MalformedManifest, file.string() + ": unknown status " + status);
        return b;
    } catch (const json::exception& e) {
        throw Error(Errc::MalformedManifest, file.string() + ": " + e.what());
    }
}

void save_batch(const Batch& b, const fs::path& root) {
    std::error_code ec;
    fs::create_directories(batch_dir(root), ec);
    if (ec)
        throw Error(Errc::IoError, "cannot create " + batch_dir(root).string() + ": " + ec.message());
    const json j{{"batch_id", b.batch_id},
                 {"unit_ids", b.unit_ids},
                 {"created_at", b.created_at},
                 {"status", to_string(b.status)}};
    fsutil::write_file(batch_dir(root) / (b.batch_id + ".json"), j.dump(2) + "\n");
}

Batch create_batch(const fs::path& root, std::size_t min_units, std::string at) {
    std::vector<std::pair<fs::path, UnitStatus>> waiting;
    for (const auto& dir : discover_units(root)) {
        auto s = load_status(dir);
        if (s.state == UnitState::Accepted)
            waiting.emplace_back(dir, std::move(s));
    }
    if (waiting.empty() || waiting.size() < min_units)
        throw Error(Errc::NotEnoughUnits, fmt::format("{} accepted unit{} waiting, batch needs {}", waiting.size(),
                                                      waiting.size() == 1 ? "" : "s", std::max<std::size_t>(min_units, 1)));

    std::size_t next = 1;
    for (const auto& id : list_batches(root))
        if (id.rfind("batch-", 0) == 0)
            if (const auto n = text::parse_unsigned(std::string_view(id).substr(6)))
                next = std::max<std::size_t>(next, *n + 1);

    Batch b{fmt::format("batch-{:04d}", next), {}, at, BatchStatus::Open};
    for (const auto& [dir, status] : waiting)
        b.unit_ids.push_back(unit_id_of(dir));
    save_batch(b, root);
    for (auto& [dir, status] : waiting) {
        status.apply(LifecycleEvent::BatchInclusion, at);
        save_status(status, dir);
    }
    return b;
}

// --- custody -----------------------------------------------------------------

std::string CustodyLedger::holder(std::string_view unit_id) const {
    const auto it = holders_.find(unit_id);
    return it == holders_.end() ? std::string(kInitialCustodian) : it->second;
}

void CustodyLedger::record(CustodyEvent e) {
    if (e.unit_id.empty() || text::trim(e.from_party).empty() || text::trim(e.to_party).empty())
        throw Error(Errc::ConfigInvalid, "custody event needs a unit, a giving and a receiving party");
    if (e.from_party == e.to_party)
        throw Error(Errc::ConfigInvalid, "hand-over of " + e.unit_id + " from " + e.from_party + " to itself");
    const auto current = holder(e.unit_id);
    if (current != e.from_party)
        throw Error(Errc::HolderMismatch,
                    e.unit_id + " is held by " + current + ", not by " + e.from_party);
    holders_.insert_or_assign(e.unit_id, e.to_party);
    events_.push_back(std::move(e));
}

namespace {

const csv::Row kCustodyHeader{"unit_id", "from_party", "to_party", "timestamp", "note"};

}  // namespace

CustodyLedger load_custody(const fs::path& file) {
    CustodyLedger ledger;
    if (!fs::exists(file))
        return ledger;
    const auto rows = csv::parse(fsutil::read_file(file));
    if (rows.empty() || rows[0] != kCustodyHeader)
        throw Error(Errc::MalformedCsv, file.string() + ": header must be " + text::join(kCustodyHeader, ","));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].size() != kCustodyHeader.size())
            throw Error(Errc::MalformedCsv, file.string() + " row " + std::to_string(i + 1) + ": expected 5 cells");
        try {
            ledger.record(CustodyEvent{rows[i][0], rows[i][1], rows[i][2], rows[i][3], rows[i][4]});
        } catch (const Error& e) {
            throw Error(e.code(), file.string() + " row " + std::to_string(i + 1) + ": " + e.message());
        }
    }
    return ledger;
}

void record_custody(CustodyLedger& ledger, const CustodyEvent& e, const fs::path& file) {
    ledger.record(e);
    if (!fs::exists(file))
        fsutil::write_file(file, csv::format_row(kCustodyHeader));
    fsutil::append_file(file, csv::format_row({e.unit_id, e.from_party, e.to_party, e.timestamp, e.note}));
}

}  // namespace chmeta
