#ifndef BRAIDHOPF_ERROR_HPP
#define BRAIDHOPF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace braidhopf {

enum class ErrorKind {
    shape_mismatch,
    not_idempotent,
    backend_mismatch,
    missing_grading,
    missing_action,
    group_law,
    split_failure,
    not_invertible,
    precondition_failed,
    transcription_mismatch,
    backend_unsupported,
    parse,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace braidhopf

#endif
