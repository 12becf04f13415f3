#include "defectus/errors.hpp"

namespace defectus {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::parse_error: return "ParseError";
        case ErrorCode::not_in_ring: return "NotInRing";
        case ErrorCode::backend_mismatch: return "BackendMismatch";
        case ErrorCode::not_a_unit: return "NotAUnit";
        case ErrorCode::not_square: return "NotSquare";
        case ErrorCode::bad_minor_size: return "BadMinorSize";
        case ErrorCode::dimension_mismatch: return "DimensionMismatch";
        case ErrorCode::not_unimodular: return "NotUnimodular";
        case ErrorCode::bad_window: return "BadWindow";
        case ErrorCode::sampling_exhausted: return "SamplingExhausted";
        case ErrorCode::point_not_on_variety: return "PointNotOnVariety";
        case ErrorCode::precondition_violated: return "PreconditionViolated";
        case ErrorCode::size_too_large: return "SizeTooLarge";
        case ErrorCode::not_prime: return "NotPrime";
        case ErrorCode::bad_input: return "BadInput";
        case ErrorCode::division_by_zero: return "DivisionByZero";
    }
    return "UnknownError";
}

} // namespace defectus
