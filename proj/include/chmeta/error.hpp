#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace chmeta {

/// Failure codes shared by every module. Each value names one documented
/// error condition; `to_string` yields the stable token used in messages.
enum class Errc {
    // model
    NotTwoParts,
    CategoryOutOfRange,
    SequenceNotPositiveInteger,
    NonCanonicalForm,
    GrammarMismatch,
    CalendarInvalid,
    RangeReversed,
    MissingPrefix,
    EmptyName,
    InvalidSecId,
    ConfigInvalid,
    // ingest
    MissingManifest,
    MalformedManifest,
    MissingSheet,
    HeaderUnknownField,
    DuplicateHeader,
    EncodingError,
    MalformedCsv,
    InvalidMapRow,
    DuplicateBinding,
    SchemaDowngrade,
    UnreadableFile,
    IoError,
    // sec
    ProposalNotPending,
    TargetMissing,
    InvalidProposal,
    IdSpaceExhausted,
    // scanmap / semantic
    MapSheetAbsent,
    PreconditionViolated,
    // export
    UnitNotAccepted,
    EmptyInput,
    MetricIncomplete,
    InvalidIriPolicy,
    // pipeline
    IllegalTransition,
    NotEnoughUnits,
    HolderMismatch,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), message_(message) {}

    Errc code() const noexcept { return code_; }
    /// The message without the code prefix.
    const std::string& message() const noexcept { return message_; }

private:
    Errc code_;
    std::string message_;
};

struct Failure {
    Errc code;
    std::string message;
};

/// Value-or-failure for parse paths that run per cell and should not throw.
template <typename T>
class Result {
public:
    Result(T value) : state_(std::in_place_index<0>, std::move(value)) {}
    Result(Failure failure) : state_(std::in_place_index<1>, std::move(failure)) {}

    bool ok() const noexcept { return state_.index() == 0; }
    explicit operator bool() const noexcept { return ok(); }

    const T& value() const& {
        throw_if_failed();
        return std::get<0>(state_);
    }
    T&& value() && {
        throw_if_failed();
        return std::get<0>(std::move(state_));
    }
    const T& operator*() const& { return value(); }
    const T* operator->() const { return &value(); }

    const Failure& failure() const { return std::get<1>(state_); }
    Errc code() const { return failure().code; }

private:
    void throw_if_failed() const {
        if (!ok()) {
            const auto& f = std::get<1>(state_);
            throw Error(f.code, f.message);
        }
    }

    std::variant<T, Failure> state_;
};

}  // namespace chmeta
