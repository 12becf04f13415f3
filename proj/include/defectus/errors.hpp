#pragma once

#include <stdexcept>
#include <string>

namespace defectus {

enum class ErrorCode {
    parse_error,
    not_in_ring,
    backend_mismatch,
    not_a_unit,
    not_square,
    bad_minor_size,
    dimension_mismatch,
    not_unimodular,
    bad_window,
    sampling_exhausted,
    point_not_on_variety,
    precondition_violated,
    size_too_large,
    not_prime,
    bad_input,
    division_by_zero,
};

const char* error_code_name(ErrorCode code);

/// Exception carrying a stable machine-readable code plus a human message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace defectus
