#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace comblock {

enum class ErrorCode {
    // lock configuration
    DuplicateCodeKey,
    OverlappingRoles,
    KeyOutOfRange,
    EmptyCode,
    InvalidHoldTime,
    // circuit math
    NonPositiveRC,
    ThresholdAboveInitial,
    InvalidBias,
    ZeroTotalResistance,
    NonPositiveFC,
    InvalidParameter,
    // simulation
    UnsortedEvents,
    NegativeTime,
    EndBeforeLastEvent,
    // keyspace audit
    KOutOfRange,
    LengthOutOfRange,
    Overflow,
    // anything else that violates a documented precondition
    InvalidArgument,
};

/// Stable identifier used in diagnostics, e.g. "DuplicateCodeKey".
std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace comblock
