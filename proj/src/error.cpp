#include "qstack/error.hpp"

namespace qstack {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DuplicateName: return "DuplicateName";
        case ErrorCode::ZeroWeights: return "ZeroWeights";
        case ErrorCode::UnknownName: return "UnknownName";
        case ErrorCode::GateTooLarge: return "GateTooLarge";
        case ErrorCode::BadShape: return "BadShape";
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::InternalError: return "InternalError";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ArityError: return "ArityError";
        case ErrorCode::UnknownGate: return "UnknownGate";
        case ErrorCode::UseBeforePush: return "UseBeforePush";
        case ErrorCode::UseAfterMeasure: return "UseAfterMeasure";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

ScriptError::ScriptError(ErrorCode code, std::size_t line, const std::string& message)
    : Error(code, "line " + std::to_string(line) + ": " + message), line_(line) {}

}  // namespace qstack
