#include "ptlab/error.hpp"

namespace ptlab {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::syntax_error: return "SyntaxError";
    case ErrorCode::arity_error: return "ArityError";
    case ErrorCode::domain_error: return "DomainError";
    case ErrorCode::degenerate_frame: return "DegenerateFrame";
    case ErrorCode::degenerate_submersion: return "DegenerateSubmersion";
    case ErrorCode::orientation_mismatch: return "OrientationMismatch";
    case ErrorCode::loops_too_close: return "LoopsTooClose";
    case ErrorCode::wrong_ambient_dimension: return "WrongAmbientDimension";
    case ErrorCode::point_not_on_fiber: return "PointNotOnFiber";
    case ErrorCode::not_regular: return "NotRegular";
    case ErrorCode::budget_exhausted: return "BudgetExhausted";
    case ErrorCode::continuation_failed: return "ContinuationFailed";
    case ErrorCode::escaped_support: return "EscapedSupport";
    case ErrorCode::unsupported_dimension: return "UnsupportedDimension";
    case ErrorCode::non_integer_linking: return "NonIntegerLinking";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::epsilon_underflow: return "EpsilonUnderflow";
    case ErrorCode::outside_ball: return "OutsideBall";
    case ErrorCode::precondition_violated: return "PreconditionViolated";
    case ErrorCode::io_error: return "IoError";
    }
    return "UnknownError";
}

} // namespace ptlab
