#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace grover_lab {

// All library errors carry a short stable code ("bad-index", "shape-error", ...)
// that the CLI prints verbatim; what() adds a human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void raise(const char* code, const std::string& detail) {
    throw Error(code, detail);
}

}  // namespace grover_lab
