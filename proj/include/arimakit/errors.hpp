#pragma once

#include <stdexcept>
#include <string>

namespace arimakit {

/// Error categories exposed across the C API boundary as status codes.
enum class ErrorCode {
    invalid_argument,
    parse,
    insufficient_data,
    degenerate_series,
    numeric,
    no_viable_model,
    not_found,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace arimakit
