#include "obstructa/error.hpp"

namespace obstructa {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::CapacityExceeded: return "CapacityExceeded";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorCode::MalformedGraph6: return "MalformedGraph6";
        case ErrorCode::NotConnected: return "NotConnected";
        case ErrorCode::NotTwoConnected: return "NotTwoConnected";
        case ErrorCode::EdgeAbsent: return "EdgeAbsent";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::ShortVariant: return "ShortVariant";
        case ErrorCode::TooManyThetaChords: return "TooManyThetaChords";
        case ErrorCode::InvalidLengths: return "InvalidLengths";
        case ErrorCode::TooFewSpokes: return "TooFewSpokes";
        case ErrorCode::InvalidSpec: return "InvalidSpec";
        case ErrorCode::AmbiguousMidpoints: return "AmbiguousMidpoints";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace obstructa
