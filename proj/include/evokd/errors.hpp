#pragma once

#include <stdexcept>
#include <string>

namespace evokd {

// Error taxonomy shared by every module. The CLI maps categories onto
// stable exit codes: config/parse/validation/data/io -> 2,
// teacher_unavailable -> 3, numeric -> 4.
enum class ErrorCategory {
    Config,
    Parse,
    Validation,
    Data,
    Io,
    Numeric,
    TeacherUnavailable,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& message)
        : std::runtime_error(message), category_(category) {}

    ErrorCategory category() const { return category_; }

private:
    ErrorCategory category_;
};

inline Error config_error(const std::string& msg) { return Error(ErrorCategory::Config, msg); }
inline Error parse_error(const std::string& msg) { return Error(ErrorCategory::Parse, msg); }
inline Error validation_error(const std::string& msg) { return Error(ErrorCategory::Validation, msg); }
inline Error data_error(const std::string& msg) { return Error(ErrorCategory::Data, msg); }
inline Error io_error(const std::string& msg) { return Error(ErrorCategory::Io, msg); }
inline Error numeric_error(const std::string& msg) { return Error(ErrorCategory::Numeric, msg); }
inline Error teacher_unavailable(const std::string& msg) {
    return Error(ErrorCategory::TeacherUnavailable, msg);
}

}  // namespace evokd
