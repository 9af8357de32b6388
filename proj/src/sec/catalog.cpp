#include "chmeta/sec/catalog.hpp"

#include <algorithm>

#include "chmeta/error.hpp"

namespace chmeta {

SecCatalog::SecCatalog(std::vector<SecEntry> persons, std::vector<SecEntry> places, std::vector<SecId> retired)
    : persons_(std::move(persons)), places_(std::move(places)), retired_(std::move(retired)) {
    reindex();
}

const std::vector<SecEntry>& SecCatalog::entries(SecKind kind) const noexcept {
    return kind == SecKind::Person ? persons_ : places_;
}

void SecCatalog::reindex() {
    person_index_.clear();
    place_index_.clear();
    for (std::size_t i = 0; i < persons_.size(); ++i)
        if (persons_[i].id.kind == SecKind::Person)
            person_index_.emplace(persons_[i].id.number, i);
    for (std::size_t i = 0; i < places_.size(); ++i)
        if (places_[i].id.kind == SecKind::Place)
            place_index_.emplace(places_[i].id.number, i);
}

const SecEntry* SecCatalog::resolve(SecId id) const noexcept {
    const auto& index = id.kind == SecKind::Person ? person_index_ : place_index_;
    const auto it = index.find(id.number);
    if (it == index.end())
        return nullptr;
    return &entries(id.kind)[it->second];
}

SecId allocate_id(SecCatalog& catalog, SecKind kind) {
    auto& reserved = kind == SecKind::Person ? catalog.reserved_person_ : catalog.reserved_place_;
    std::uint32_t high = reserved;
    for (const auto& e : catalog.entries(kind))
        high = std::max(high, e.id.number);
    for (const auto& id : catalog.retired_)
        if (id.kind == kind)
            high = std::max(high, id.number);
    if (high >= SecId::kMaxNumber)
        throw Error(Errc::IdSpaceExhausted, std::string("no ") + std::string(to_string(kind)) + " ids left");
    reserved = high + 1;
    return SecId{kind, reserved};
}

SecId insert_entry(SecCatalog& catalog, SecEntry entry) {
    const SecKind kind = entry.id.kind;
    entry.id = allocate_id(catalog, kind);
    auto& table = catalog.table(kind);
    table.push_back(std::move(entry));
    auto& index = kind == SecKind::Person ? catalog.person_index_ : catalog.place_index_;
    index.emplace(table.back().id.number, table.size() - 1);
    return table.back().id;
}

void retire_entry(SecCatalog& catalog, SecId id) {
    auto& table = catalog.table(id.kind);
    const auto it = std::find_if(table.begin(), table.end(), [&](const SecEntry& e) { return e.id == id; });
    if (it == table.end())
        throw Error(Errc::TargetMissing, id.to_string() + " is not in the catalog");
    table.erase(it);
    catalog.retired_.push_back(id);
    catalog.reindex();
}

namespace {

void union_into(std::vector<std::string>& into, const std::vector<std::string>& extra) {
    for (const auto& v : extra)
        if (!v.empty() && std::find(into.begin(), into.end(), v) == into.end())
            into.push_back(v);
}

void overwrite_if_set(std::string& into, const std::string& value) {
    if (!value.empty())
        into = value;
}

}  // namespace

void merge_into_entry(SecCatalog& catalog, SecId target, const SecEntry& payload) {
    auto& table = catalog.table(target.kind);
    auto& index = target.kind == SecKind::Person ? catalog.person_index_ : catalog.place_index_;
    auto& e = table[index.at(target.number)];
    overwrite_if_set(e.preferred_name, payload.preferred_name);
    union_into(e.variant_names, payload.variant_names);
    overwrite_if_set(e.birth, payload.birth);
    overwrite_if_set(e.death, payload.death);
    union_into(e.external_urls, payload.external_urls);
    overwrite_if_set(e.notes, payload.notes);
}

std::string_view to_string(ProposalStatus s) noexcept {
    switch (s) {
    case ProposalStatus::Pending: return "pending";
    case ProposalStatus::Accepted: return "accepted";
    case ProposalStatus::Rejected: return "rejected";
    }
    return "pending";
}

std::optional<ProposalStatus> proposal_status_from_string(std::string_view s) noexcept {
    if (s == "pending" || s.empty())
        return ProposalStatus::Pending;
    if (s == "accepted")
        return ProposalStatus::Accepted;
    if (s == "rejected")
        return ProposalStatus::Rejected;
    return std::nullopt;
}

std::optional<SecId> apply_proposal(SecCatalog& catalog, Proposal& p, Decision decision) {
    if (p.status != ProposalStatus::Pending)
        throw Error(Errc::ProposalNotPending,
                    "proposal '" + p.proposal_id + "' is already " + std::string(to_string(p.status)));
    const SecKind kind = p.payload.id.kind;
    if (p.target && p.target->kind != kind)
        throw Error(Errc::InvalidProposal, "proposal '" + p.proposal_id + "' targets " + p.target->to_string() +
                                               " from the " + std::string(to_string(kind)) + " proposals");

    if (decision == Decision::Reject) {
        p.status = ProposalStatus::Rejected;
        return std::nullopt;
    }

    std::optional<SecId> changed;
    if (!p.target) {
        if (p.payload.preferred_name.empty())
            throw Error(Errc::InvalidProposal, "new-entry proposal '" + p.proposal_id + "' has no preferred name");
        changed = insert_entry(catalog, p.payload);
    } else {
        if (catalog.resolve(*p.target) == nullptr)
            throw Error(Errc::TargetMissing, "proposal '" + p.proposal_id + "' targets unknown " + p.target->to_string());
        merge_into_entry(catalog, *p.target, p.payload);
        changed = p.target;
    }
    p.status = ProposalStatus::Accepted;
    return changed;
}

}  // namespace chmeta
