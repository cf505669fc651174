#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tanrep {

enum class ErrorKind {
    InvalidParameter,
    NoExactWindow,
    OutOfWindow,
    OutOfRange,
    NoConvergence,
    AmbiguousFloor,
    DomainError,
    RangeTooLarge,
    InvalidRange,
    WindowMismatch,
    TooLarge,
    BandTooWide,
    Singular,
    UsageError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries one of the kinds above so the
// CLI can map it to a stable exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// 2 = usage, 3 = domain, 4 = resource.
int exit_code_for(ErrorKind kind) noexcept;

}  // namespace tanrep
