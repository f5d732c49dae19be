#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace czoo {

// Error categories; values double as CLI exit codes.
enum class errc : int {
    usage = 1,        // bad arguments, unknown measure, parameter out of range
    requirement = 2,  // graph does not satisfy a measure's requirements
    convergence = 3,  // iterative solver failed to converge
    io = 4,           // file access or parse failure
};

class error : public std::runtime_error {
public:
    error(errc code, std::string reason, const std::string& message)
        : std::runtime_error(message), code_(code), reason_(std::move(reason)) {}

    errc code() const noexcept { return code_; }

    // Short machine-readable token, e.g. "requires-connected".
    const std::string& reason() const noexcept { return reason_; }

private:
    errc code_;
    std::string reason_;
};

[[noreturn]] inline void throw_usage(const std::string& reason, const std::string& msg) {
    throw error(errc::usage, reason, msg);
}
[[noreturn]] inline void throw_requirement(const std::string& reason, const std::string& msg) {
    throw error(errc::requirement, reason, msg);
}
[[noreturn]] inline void throw_convergence(const std::string& reason, const std::string& msg) {
    throw error(errc::convergence, reason, msg);
}
[[noreturn]] inline void throw_io(const std::string& reason, const std::string& msg) {
    throw error(errc::io, reason, msg);
}

}  // namespace czoo
