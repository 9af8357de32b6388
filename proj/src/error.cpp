#include "chmeta/error.hpp"

namespace chmeta {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
    case Errc::NotTwoParts: return "NotTwoParts";
    case Errc::CategoryOutOfRange: return "CategoryOutOfRange";
    case Errc::SequenceNotPositiveInteger: return "SequenceNotPositiveInteger";
    case Errc::NonCanonicalForm: return "NonCanonicalForm";
    case Errc::GrammarMismatch: return "GrammarMismatch";
    case Errc::CalendarInvalid: return "CalendarInvalid";
    case Errc::RangeReversed: return "RangeReversed";
    case Errc::MissingPrefix: return "MissingPrefix";
    case Errc::EmptyName: return "EmptyName";
    case Errc::InvalidSecId: return "InvalidSecId";
    case Errc::ConfigInvalid: return "ConfigInvalid";
    case Errc::MissingManifest: return "MissingManifest";
    case Errc::MalformedManifest: return "MalformedManifest";
    case Errc::MissingSheet: return "MissingSheet";
    case Errc::HeaderUnknownField: return "HeaderUnknownField";
    case Errc::DuplicateHeader: return "DuplicateHeader";
    case Errc::EncodingError: return "EncodingError";
    case Errc::MalformedCsv: return "MalformedCsv";
    case Errc::InvalidMapRow: return "InvalidMapRow";
    case Errc::DuplicateBinding: return "DuplicateBinding";
    case Errc::SchemaDowngrade: return "SchemaDowngrade";
    case Errc::UnreadableFile: return "UnreadableFile";
    case Errc::IoError: return "IoError";
    case Errc::ProposalNotPending: return "ProposalNotPending";
    case Errc::TargetMissing: return "TargetMissing";
    case Errc::InvalidProposal: return "InvalidProposal";
    case Errc::IdSpaceExhausted: return "IdSpaceExhausted";
    case Errc::MapSheetAbsent: return "MapSheetAbsent";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::UnitNotAccepted: return "UnitNotAccepted";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::MetricIncomplete: return "MetricIncomplete";
    case Errc::InvalidIriPolicy: return "InvalidIriPolicy";
    case Errc::IllegalTransition: return "IllegalTransition";
    case Errc::NotEnoughUnits: return "NotEnoughUnits";
    case Errc::HolderMismatch: return "HolderMismatch";
    }
    return "Unknown";
}

}  // namespace chmeta
