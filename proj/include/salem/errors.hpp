#pragma once

#include <stdexcept>
#include <string>

namespace salem {

/// Error codes carried by salem::Error. One value per failure mode the
/// library promises to report; see the throwing function for the trigger.
enum class errc {
    NotSelfReciprocal,
    OddDegree,
    NotMonic,
    ZeroPolynomial,
    ZeroDivisor,
    DomainError,
    DegreeMismatch,
    BoundTooSmall,
    LayoutViolation,
    OverlappingIntervals,
    UnsupportedParams,
    OddDimension,
    DuplicatePoints,
    OutOfDomain,
    UnsupportedM,
    ToleranceNotMet,
    SingularStencil,
    EmptyCensus,
    IoError,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::NotSelfReciprocal: return "NotSelfReciprocal";
        case errc::OddDegree: return "OddDegree";
        case errc::NotMonic: return "NotMonic";
        case errc::ZeroPolynomial: return "ZeroPolynomial";
        case errc::ZeroDivisor: return "ZeroDivisor";
        case errc::DomainError: return "DomainError";
        case errc::DegreeMismatch: return "DegreeMismatch";
        case errc::BoundTooSmall: return "BoundTooSmall";
        case errc::LayoutViolation: return "LayoutViolation";
        case errc::OverlappingIntervals: return "OverlappingIntervals";
        case errc::UnsupportedParams: return "UnsupportedParams";
        case errc::OddDimension: return "OddDimension";
        case errc::DuplicatePoints: return "DuplicatePoints";
        case errc::OutOfDomain: return "OutOfDomain";
        case errc::UnsupportedM: return "UnsupportedM";
        case errc::ToleranceNotMet: return "ToleranceNotMet";
        case errc::SingularStencil: return "SingularStencil";
        case errc::EmptyCensus: return "EmptyCensus";
        case errc::IoError: return "IoError";
    }
    return "UnknownError";
}

/// Exception type used throughout the library. Carries a machine-checkable
/// code plus a human-readable message.
class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace salem
