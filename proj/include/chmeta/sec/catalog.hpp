#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "chmeta/check/diagnostic.hpp"
#include "chmeta/model/date.hpp"
#include "chmeta/sec/sec_id.hpp"

namespace chmeta {

/// Person or place authority record. Life dates are kept as raw cell text
/// (persons only) so that malformed values surface as findings.
struct SecEntry {
    SecId id;
    std::string preferred_name;
    std::vector<std::string> variant_names;
    std::string birth;
    std::string death;
    std::vector<std::string> external_urls;
    std::string notes;

    bool operator==(const SecEntry&) const = default;

    SecKind kind() const noexcept { return id.kind; }
};

/// Standard entries catalog: one table per kind plus the list of retired
/// ids, which are never handed out again.
class SecCatalog {
public:
    SecCatalog() = default;
    SecCatalog(std::vector<SecEntry> persons, std::vector<SecEntry> places, std::vector<SecId> retired = {});

    const std::vector<SecEntry>& persons() const noexcept { return persons_; }
    const std::vector<SecEntry>& places() const noexcept { return places_; }
    const std::vector<SecEntry>& entries(SecKind kind) const noexcept;
    const std::vector<SecId>& retired() const noexcept { return retired_; }
    std::size_t size() const noexcept { return persons_.size() + places_.size(); }

    /// Exact-id lookup within the id's own kind table. First entry wins when
    /// ids collide.
    const SecEntry* resolve(SecId id) const noexcept;

    bool operator==(const SecCatalog& other) const {
        return persons_ == other.persons_ && places_ == other.places_ && retired_ == other.retired_;
    }

private:
    friend SecId allocate_id(SecCatalog& catalog, SecKind kind);
    friend SecId insert_entry(SecCatalog& catalog, SecEntry entry);
    friend void merge_into_entry(SecCatalog& catalog, SecId target, const SecEntry& payload);
    friend void retire_entry(SecCatalog& catalog, SecId id);

    std::vector<SecEntry>& table(SecKind kind) noexcept { return kind == SecKind::Person ? persons_ : places_; }
    void reindex();

    std::vector<SecEntry> persons_;
    std::vector<SecEntry> places_;
    std::vector<SecId> retired_;
    std::unordered_map<std::uint32_t, std::size_t> person_index_;
    std::unordered_map<std::uint32_t, std::size_t> place_index_;
    std::uint32_t reserved_person_ = 0;
    std::uint32_t reserved_place_ = 0;
};

/// Reserves and returns the next id of `kind`: one past the highest number
/// ever seen for that kind (live entries, retired ids, earlier reservations).
/// Throws Error(IdSpaceExhausted) past 999999.
SecId allocate_id(SecCatalog& catalog, SecKind kind);

/// Inserts under a freshly allocated id and returns it; payload id ignored.
SecId insert_entry(SecCatalog& catalog, SecEntry entry);

/// Removes the entry and records its id as retired.
void retire_entry(SecCatalog& catalog, SecId id);

inline const SecEntry* resolve_ref(const SecCatalog& catalog, SecId id) noexcept {
    return catalog.resolve(id);
}

// --- proposals ---------------------------------------------------------------

enum class ProposalStatus { Pending, Accepted, Rejected };
enum class Decision { Accept, Reject };

std::string_view to_string(ProposalStatus s) noexcept;
std::optional<ProposalStatus> proposal_status_from_string(std::string_view s) noexcept;

/// A suggested new entry (`target` empty) or an amendment to an existing one.
/// `payload.id.kind` carries the table the proposal belongs to.
struct Proposal {
    std::string proposal_id;
    std::optional<SecId> target;
    SecEntry payload;
    std::string proposer;
    ProposalStatus status = ProposalStatus::Pending;

    bool operator==(const Proposal&) const = default;
};

/// Coordinator decision on one proposal. Accepting a new entry inserts it
/// under a fresh id; accepting an amendment unions variant names and URLs
/// and overwrites scalar fields the payload fills. Rejecting leaves the
/// catalog untouched. The proposal's status is updated in every case.
/// Returns the id that was created or modified, if any.
///
/// Throws Error(ProposalNotPending), Error(TargetMissing) or
/// Error(InvalidProposal); the catalog is unchanged when it throws.
std::optional<SecId> apply_proposal(SecCatalog& catalog, Proposal& proposal, Decision decision);

// --- authority URLs ------------------------------------------------------------

enum class Authority { Geonames, Gnd, Wikidata };

std::string_view to_string(Authority a) noexcept;

struct UrlLint {
    std::optional<Authority> authority;
    Diagnostics findings;
};

/// Offline check of an external authority link: absolute http(s) URL with a
/// host, tagged when the host is a known authority.
UrlLint lint_authority_url(std::string_view url, Sheet sheet = Sheet::Persons, int row = 1,
                           std::string_view column = "external_urls");

/// Local identifier of an authority URL ("118560565" for a GND link).
std::optional<std::string> authority_local_id(std::string_view url);

// --- files -----------------------------------------------------------------

namespace sec_file {
inline constexpr std::string_view kPersons = "persons.csv";
inline constexpr std::string_view kPlaces = "places.csv";
inline constexpr std::string_view kPersonProposals = "proposals_persons.csv";
inline constexpr std::string_view kPlaceProposals = "proposals_places.csv";
inline constexpr std::string_view kRetired = "retired.csv";
}  // namespace sec_file

/// Reads persons.csv and places.csv (both required) and retired.csv (optional).
/// Throws Error(MissingSheet), Error(EncodingError), Error(MalformedCsv) or
/// Error(InvalidSecId) with the offending row.
SecCatalog load_sec_catalog(const std::filesystem::path& dir);
void save_sec_catalog(const SecCatalog& catalog, const std::filesystem::path& dir);

std::string render_entries_csv(const std::vector<SecEntry>& entries, SecKind kind);

/// Missing file means no proposals.
std::vector<Proposal> load_proposals(const std::filesystem::path& file, SecKind kind);
void save_proposals(const std::vector<Proposal>& proposals, SecKind kind, const std::filesystem::path& file);

}  // namespace chmeta
