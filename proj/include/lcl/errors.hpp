#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lcl {

// All recoverable failures carry a stable machine-readable code plus an
// optional subject (vertex id, state name, ...) for diagnostics.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message, std::string subject = {})
        : std::runtime_error(message), code_(std::move(code)), subject_(std::move(subject)) {}

    const std::string& code() const noexcept { return code_; }
    const std::string& subject() const noexcept { return subject_; }

private:
    std::string code_;
    std::string subject_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message,
                              std::string subject = {}) {
    throw Error(std::move(code), message, std::move(subject));
}

}  // namespace lcl
