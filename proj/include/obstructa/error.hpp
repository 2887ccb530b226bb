#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace obstructa {

enum class ErrorCode {
    CapacityExceeded,
    SelfLoop,
    VertexOutOfRange,
    MalformedGraph6,
    NotConnected,
    NotTwoConnected,
    EdgeAbsent,
    TooLarge,
    ShortVariant,
    TooManyThetaChords,
    InvalidLengths,
    TooFewSpokes,
    InvalidSpec,
    AmbiguousMidpoints,
    PreconditionViolated,
    ParseError,
};

std::string_view to_string(ErrorCode code);

// Every library failure is reported through this type; the code is what
// callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace obstructa
