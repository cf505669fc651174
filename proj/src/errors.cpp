#include "tanrep/errors.hpp"

namespace tanrep {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidParameter: return "InvalidParameter";
        case ErrorKind::NoExactWindow: return "NoExactWindow";
        case ErrorKind::OutOfWindow: return "OutOfWindow";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::AmbiguousFloor: return "AmbiguousFloor";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::RangeTooLarge: return "RangeTooLarge";
        case ErrorKind::InvalidRange: return "InvalidRange";
        case ErrorKind::WindowMismatch: return "WindowMismatch";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::BandTooWide: return "BandTooWide";
        case ErrorKind::Singular: return "Singular";
        case ErrorKind::UsageError: return "UsageError";
    }
    return "Unknown";
}

int exit_code_for(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::UsageError:
            return 2;
        case ErrorKind::RangeTooLarge:
        case ErrorKind::TooLarge:
        case ErrorKind::BandTooWide:
            return 4;
        default:
            return 3;
    }
}

}  // namespace tanrep
