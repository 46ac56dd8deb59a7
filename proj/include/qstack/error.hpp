#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qstack {

enum class ErrorCode {
    DuplicateName,
    ZeroWeights,
    UnknownName,
    GateTooLarge,
    BadShape,
    NonFinite,
    ShapeMismatch,
    InvalidArgument,
    OutOfRange,
    InternalError,
    // Static script diagnostics.
    ParseError,
    ArityError,
    UnknownGate,
    UseBeforePush,
    UseAfterMeasure,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// An error attributed to a 1-based line of a circuit script.
class ScriptError : public Error {
public:
    ScriptError(ErrorCode code, std::size_t line, const std::string& message);

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace qstack
