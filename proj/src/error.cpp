#include <chrotop/error.hpp>

namespace chrotop {

auto to_string(ErrorCode code) -> std::string_view
{
    switch (code) {
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::NotASimplex: return "NotASimplex";
    case ErrorCode::InvalidCarrier: return "InvalidCarrier";
    case ErrorCode::IncompleteMap: return "IncompleteMap";
    case ErrorCode::NotChromatic: return "NotChromatic";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::InvalidTermination: return "InvalidTermination";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::BadArity: return "BadArity";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::IrrevocabilityViolation: return "IrrevocabilityViolation";
    case ErrorCode::InvalidOutput: return "InvalidOutput";
    case ErrorCode::NotBoundedBy: return "NotBoundedBy";
    case ErrorCode::BadIndices: return "BadIndices";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Error";
}

}
