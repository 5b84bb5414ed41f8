#include "comblock/error.hpp"

namespace comblock {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DuplicateCodeKey: return "DuplicateCodeKey";
        case ErrorCode::OverlappingRoles: return "OverlappingRoles";
        case ErrorCode::KeyOutOfRange: return "KeyOutOfRange";
        case ErrorCode::EmptyCode: return "EmptyCode";
        case ErrorCode::InvalidHoldTime: return "InvalidHoldTime";
        case ErrorCode::NonPositiveRC: return "NonPositiveRC";
        case ErrorCode::ThresholdAboveInitial: return "ThresholdAboveInitial";
        case ErrorCode::InvalidBias: return "InvalidBias";
        case ErrorCode::ZeroTotalResistance: return "ZeroTotalResistance";
        case ErrorCode::NonPositiveFC: return "NonPositiveFC";
        case ErrorCode::InvalidParameter: return "InvalidParameter";
        case ErrorCode::UnsortedEvents: return "UnsortedEvents";
        case ErrorCode::NegativeTime: return "NegativeTime";
        case ErrorCode::EndBeforeLastEvent: return "EndBeforeLastEvent";
        case ErrorCode::KOutOfRange: return "KOutOfRange";
        case ErrorCode::LengthOutOfRange: return "LengthOutOfRange";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace comblock
