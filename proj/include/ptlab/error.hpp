#pragma once

#include <stdexcept>
#include <string>

namespace ptlab {

// Error taxonomy shared across modules. Codes are stable strings in CLI
// output, so renaming one is a schema change.
enum class ErrorCode {
    syntax_error,
    arity_error,
    domain_error,
    degenerate_frame,
    degenerate_submersion,
    orientation_mismatch,
    loops_too_close,
    wrong_ambient_dimension,
    point_not_on_fiber,
    not_regular,
    budget_exhausted,
    continuation_failed,
    escaped_support,
    unsupported_dimension,
    non_integer_linking,
    dimension_mismatch,
    epsilon_underflow,
    outside_ball,
    precondition_violated,
    io_error,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    ErrorCode code() const { return code_; }
    const char* code_name() const { return error_code_name(code_); }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace ptlab
