#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chrotop {

enum class ErrorCode {
    InvalidVertex,
    NotASimplex,
    InvalidCarrier,
    IncompleteMap,
    NotChromatic,
    UnknownVertex,
    InvalidTermination,
    BaseMismatch,
    BadArity,
    Unsupported,
    IrrevocabilityViolation,
    InvalidOutput,
    NotBoundedBy,
    BadIndices,
    ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string & what) :
        std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code)
    {
    }

    auto code() const -> ErrorCode { return code_; }

private:
    ErrorCode code_;
};

}
