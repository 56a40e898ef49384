#pragma once

#include <stdexcept>
#include <string>

namespace vocalfeat {

enum class ErrorCode {
    invalid_argument,
    file_not_found,
    not_pcm,
    empty_data,
    malformed_file,
    io_error,
    parse_error,
    unknown_feature,
    length_mismatch,
    dimension_mismatch,
    single_class,
    too_few_samples,
    empty_subset,
    training_failed,
};

inline const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::file_not_found: return "file_not_found";
    case ErrorCode::not_pcm: return "not_pcm";
    case ErrorCode::empty_data: return "empty_data";
    case ErrorCode::malformed_file: return "malformed_file";
    case ErrorCode::io_error: return "io_error";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::unknown_feature: return "unknown_feature";
    case ErrorCode::length_mismatch: return "length_mismatch";
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::single_class: return "single_class";
    case ErrorCode::too_few_samples: return "too_few_samples";
    case ErrorCode::empty_subset: return "empty_subset";
    case ErrorCode::training_failed: return "training_failed";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline void require(bool condition, const std::string& message,
                    ErrorCode code = ErrorCode::invalid_argument) {
    if (!condition) throw Error(code, message);
}

} // namespace vocalfeat
