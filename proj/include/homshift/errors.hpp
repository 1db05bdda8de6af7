#pragma once

#include <stdexcept>
#include <string>

namespace homshift {

enum class ErrorCode {
    invalid_input,
    precondition,
    unsupported_graph,
    unsupported_region,
    nothing_to_fold,
    range_too_large,
    parity,
    invalid_parameter,
    resource_limit,
};

/// All library errors are thrown as Error; code() distinguishes the class
/// (the CLI maps resource_limit to exit 3, everything else to exit 2).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::invalid_input: return "invalid-input";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::unsupported_graph: return "unsupported-graph";
    case ErrorCode::unsupported_region: return "unsupported-region";
    case ErrorCode::nothing_to_fold: return "nothing-to-fold";
    case ErrorCode::range_too_large: return "range-too-large";
    case ErrorCode::parity: return "parity";
    case ErrorCode::invalid_parameter: return "invalid-parameter";
    case ErrorCode::resource_limit: return "resource-limit";
    }
    return "error";
}

} // namespace homshift
